#include "hyperq/analysis.hpp"

#include <algorithm>
#include <limits>

#include "hyperq/errors.hpp"
#include "hyperq/transforms.hpp"

namespace hyperq {

using Wide = __int128;

std::string_view to_string(Tag tag)
{
    switch (tag) {
    case Tag::THM1:
        return "THM1";
    case Tag::THM2:
        return "THM2";
    case Tag::THM3:
        return "THM3";
    case Tag::RK61:
        return "RK61";
    case Tag::RK62:
        return "RK62";
    case Tag::U65_1:
        return "U65_1";
    case Tag::U65_2:
        return "U65_2";
    case Tag::U65_3:
        return "U65_3";
    case Tag::U65_4:
        return "U65_4";
    case Tag::OPEN:
        return "OPEN";
    }
    return "?";
}

std::string join_tags(const TagSet& tags)
{
    std::string out;
    for (Tag t : tags) {
        if (!out.empty())
            out += ' ';
        out += to_string(t);
    }
    return out;
}

std::string_view to_string(Status status)
{
    switch (status) {
    case Status::holds:
        return "HOLDS";
    case Status::violated:
        return "VIOLATED";
    case Status::unresolved:
        return "UNRESOLVED";
    case Status::out_of_scope:
        return "OUT_OF_SCOPE";
    }
    return "?";
}

bool antirank_condition(std::uint64_t antirank, std::uint64_t delta2)
{
    return Wide(antirank) * antirank >= Wide(delta2) + 1;
}

bool max_degree_condition(std::uint64_t max_degree, std::uint64_t delta2)
{
    if (max_degree <= 1)
        return true;
    const Wide d = Wide(max_degree) - 1;
    return d * d <= Wide(delta2) + 1;
}

bool rank_condition(std::uint64_t rank, std::uint64_t max_degree, std::uint64_t delta2)
{
    return Wide(rank) * (Wide(max_degree) - 1) <= Wide(delta2);
}

std::int64_t greedy_bound_value(std::uint64_t antirank, std::uint64_t rank, std::uint64_t delta2)
{
    if (antirank < 2 || rank < antirank)
        throw InputError("greedy bound needs 2 <= antirank <= rank");
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::uint64_t k = antirank; k <= rank; ++k) {
        const auto floor_term = static_cast<std::int64_t>(delta2 / (k - 1)) - 1;
        best = std::max(best, static_cast<std::int64_t>(k) * floor_term + 1);
    }
    return best;
}

std::size_t bf_bound(const Hypergraph& h)
{
    return max_degree_two_section(h) + 1;
}

std::int64_t greedy_bound(const Hypergraph& h)
{
    const auto s = stats(h);
    if (s.m == 0)
        throw UnsupportedInput("greedy bound is undefined without hyperedges");
    if (!s.loopless)
        throw UnsupportedInput("greedy bound is undefined in the presence of loops");
    return greedy_bound_value(*s.antirank, *s.rank, s.delta2);
}

std::size_t linegraph_bound(const Hypergraph& h)
{
    const auto s = stats(h);
    if (s.m == 0)
        throw InputError("line graph bound needs at least one hyperedge");
    return *s.rank * (s.max_degree - 1) + 1;
}

namespace {

BoundSet bounds_from(const Hypergraph& h, const HypergraphStats& s)
{
    BoundSet b;
    b.bf = s.delta2 + 1;
    if (s.m == 0)
        return b;
    if (s.loopless)
        b.greedy61 = greedy_bound_value(*s.antirank, *s.rank, s.delta2);
    b.linegraph62 = *s.rank * (s.max_degree - 1) + 1;
    const auto deg = hyperedge_degrees(h);
    b.max_edge_degree_plus1 = *std::max_element(deg.begin(), deg.end()) + 1;
    return b;
}

bool thm1(const HypergraphStats& s)
{
    return s.m > 0 && s.loopless && antirank_condition(*s.antirank, s.delta2);
}

bool thm2(const HypergraphStats& s)
{
    return s.m > 0 && s.linear && s.uniform_k && *s.uniform_k >= 2 && s.regular_d
           && *s.regular_d == *s.uniform_k + 1;
}

bool thm3(const HypergraphStats& s)
{
    return s.m > 0 && s.loopless && max_degree_condition(s.max_degree, s.delta2);
}

bool rk62(const HypergraphStats& s)
{
    return rank_condition(*s.rank, s.max_degree, s.delta2);
}

TagSet uniform_tags(const HypergraphStats& s)
{
    const std::uint64_t k = *s.uniform_k;
    TagSet tags;
    if (k == 2)
        tags.insert(Tag::U65_1);
    if (antirank_condition(k, s.delta2))
        tags.insert(Tag::U65_2);
    if (Wide(k) * k == Wide(s.delta2))
        tags.insert(Tag::U65_3);
    if (k >= 3 && rank_condition(k, s.max_degree, s.delta2))
        tags.insert(Tag::U65_4);
    if (tags.empty())
        tags.insert(Tag::OPEN);
    return tags;
}

} // namespace

BoundSet bounds(const Hypergraph& h)
{
    return bounds_from(h, stats(h));
}

bool check_thm1(const Hypergraph& h)
{
    return thm1(stats(h));
}

bool check_thm2(const Hypergraph& h)
{
    return thm2(stats(h));
}

bool check_thm3(const Hypergraph& h)
{
    return thm3(stats(h));
}

bool check_rk62(const Hypergraph& h)
{
    const auto s = stats(h);
    if (s.m == 0)
        throw InputError("rank condition needs at least one hyperedge");
    return rk62(s);
}

TagSet classify_uniform(const Hypergraph& h)
{
    const auto s = stats(h);
    if (s.m == 0 || !s.linear || !s.uniform_k)
        throw UnsupportedInput("uniform classification needs a linear uniform hypergraph with a hyperedge");
    return uniform_tags(s);
}

bool InequalityReport::all_hold() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

InequalityReport inequality_suite(const Hypergraph& h)
{
    const auto s = stats(h);
    InequalityReport report;

    if (s.m > 0 && s.loopless) {
        const bool ok = s.delta2 >= (*s.antirank - 1) * s.max_degree;
        report.checks.push_back({"delta2 >= (ar - 1) * max_degree", ok,
                                 std::to_string(s.delta2) + " >= " + std::to_string(*s.antirank - 1)
                                     + " * " + std::to_string(s.max_degree)});
    }

    report.edge_degree = hyperedge_degrees(h);
    report.edge_incidence_sum.resize(s.m);
    bool bound_ok = true;
    bool equality_ok = true;
    for (EdgeIndex i = 0; i < s.m; ++i) {
        std::size_t sum = 0;
        for (VertexId x : h.edges()[i])
            sum += vertex_degree(h, x) - 1;
        report.edge_incidence_sum[i] = sum;
        bound_ok = bound_ok && report.edge_degree[i] <= sum;
        equality_ok = equality_ok && report.edge_degree[i] == sum;
    }
    report.checks.push_back({"d(e) <= sum_{x in e} (deg(x) - 1) for all e", bound_ok,
                             std::to_string(s.m) + " hyperedges"});
    if (s.linear)
        report.checks.push_back({"d(e) == sum_{x in e} (deg(x) - 1) for all e (linear)", equality_ok,
                                 std::to_string(s.m) + " hyperedges"});

    if (thm2(s)) {
        const std::size_t k = *s.uniform_k;
        report.checks.push_back({"k * m == (k + 1) * n", k * s.m == (k + 1) * s.n,
                                 std::to_string(k * s.m) + " == " + std::to_string((k + 1) * s.n)});
        report.checks.push_back({"delta2 == k^2 - 1", s.delta2 == k * k - 1,
                                 std::to_string(s.delta2) + " == " + std::to_string(k * k - 1)});
        const bool all_k2 = std::all_of(report.edge_degree.begin(), report.edge_degree.end(),
                                        [&](std::size_t d) { return d == k * k; });
        report.checks.push_back({"d(e) == k^2 for all e", all_k2, "k^2 = " + std::to_string(k * k)});
    }
    return report;
}

namespace {

bool theorem_licensed(const TagSet& tags)
{
    return std::any_of(tags.begin(), tags.end(), [](Tag t) { return t != Tag::OPEN; });
}

} // namespace

Verdict verify_conjecture(const Hypergraph& h, const OracleBudget& budget, bool use_exact)
{
    Verdict v;
    v.stats = stats(h);
    const auto& s = v.stats;
    v.bounds = bounds_from(h, s);

    if (s.m > 0) {
        if (thm1(s))
            v.applicable.insert(Tag::THM1);
        if (thm2(s))
            v.applicable.insert(Tag::THM2);
        if (thm3(s))
            v.applicable.insert(Tag::THM3);
        if (s.loopless && Wide(*s.antirank) * *s.antirank > Wide(s.delta2) + 1)
            v.applicable.insert(Tag::RK61);
        if (rk62(s))
            v.applicable.insert(Tag::RK62);
        if (s.linear && s.uniform_k) {
            auto u = uniform_tags(s);
            u.erase(Tag::OPEN);
            v.applicable.insert(u.begin(), u.end());
        }
        if (v.applicable.empty())
            v.applicable.insert(Tag::OPEN);
    }
    v.in_scope = s.loopless && (s.linear || theorem_licensed(v.applicable));

    // Constructive colourings: an upper bound and a fallback witness.
    EdgeColoring best = greedy_color(h);
    v.witness_method = "greedy";
    if (auto brooks = brooks_edge_color(h); brooks.q_used < best.q_used) {
        best = std::move(brooks);
        v.witness_method = "brooks";
    }

    if (use_exact) {
        auto q = chromatic_index(h, budget);
        v.nodes = q.nodes;
        v.q_lower = q.lower;
        if (q.upper <= best.q_used) {
            best = std::move(q.witness);
            v.witness_method = "exact";
        }
    } else {
        const auto lg = line_graph(h);
        v.q_lower = std::max<Color>(greedy_clique_bound(lg), static_cast<Color>(s.max_degree));
    }
    v.q_upper = best.q_used;
    v.q_lower = std::min(v.q_lower, v.q_upper);
    v.q_exact = v.q_lower == v.q_upper;
    v.witness = std::move(best);
    v.witness_proper = is_proper(h, v.witness);

    if (!v.witness_proper) {
        v.alarm = "internal-inconsistency";
        v.status = Status::unresolved;
    } else if (v.q_upper <= v.bounds.bf) {
        v.status = Status::holds;
    } else if (!v.in_scope) {
        v.status = Status::out_of_scope;
    } else if (v.q_exact) {
        v.status = Status::violated;
        // The tagged results are theorems: exceeding them means a bug here.
        v.alarm = theorem_licensed(v.applicable) ? "internal-inconsistency" : "counterexample";
    } else {
        v.status = Status::unresolved;
    }

    if (v.q_exact && v.bounds.linegraph62 && v.q_upper > *v.bounds.linegraph62)
        v.alarm = "internal-inconsistency";
    // The greedy formula is quoted without its exact hypotheses; record, don't judge.
    if (v.q_exact && v.bounds.greedy61 && static_cast<std::int64_t>(v.q_upper) > *v.bounds.greedy61)
        v.greedy61_exceeded = true;

    if (s.linear) {
        if (v.q_upper <= s.n)
            v.efl_holds = true;
        else if (v.q_lower > s.n)
            v.efl_holds = false;
    }
    return v;
}

} // namespace hyperq
