#include "hyperq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

#include "hyperq/errors.hpp"

namespace hyperq {

namespace {

std::optional<std::uint64_t> env_number(const char* name)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0')
        throw InputError(std::string(name) + " is not a non-negative integer: " + raw);
    return v;
}

} // namespace

OracleBudget OracleBudget::from_env()
{
    OracleBudget b;
    if (auto nodes = env_number("HYPERQ_MAX_NODES"))
        b.max_nodes = *nodes;
    if (auto ms = env_number("HYPERQ_TIME_LIMIT_MS"))
        b.time_limit = std::chrono::milliseconds(*ms);
    b.validate();
    return b;
}

void OracleBudget::validate() const
{
    if (max_nodes == 0)
        throw InputError("oracle budget: max_nodes must be positive");
    if (time_limit.count() <= 0)
        throw InputError("oracle budget: time_limit must be positive");
}

Color greedy_clique_bound(const SimpleGraph& g)
{
    const std::size_t n = g.vertex_count();
    if (n == 0)
        return 0;
    std::vector<VertexId> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), VertexId{0});
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });

    const std::size_t words = g.words_per_row();
    std::vector<SimpleGraph::Word> cand(words);
    Color best = 1;
    for (VertexId start : by_degree) {
        if (g.degree(start) + 1 <= best)
            break;
        auto r = g.row(start);
        std::copy(r.begin(), r.end(), cand.begin());
        Color size = 1;
        for (VertexId v : by_degree) {
            if ((cand[v / 64] >> (v % 64)) & 1U) {
                ++size;
                auto rv = g.row(v);
                for (std::size_t w = 0; w < words; ++w)
                    cand[w] &= rv[w];
            }
        }
        best = std::max(best, size);
    }
    return best;
}

namespace {

/// Saturation bookkeeping shared by the first-fit pass and the search.
class SaturationState {
public:
    SaturationState(const SimpleGraph& g, Color capacity)
        : g_(g),
          n_(g.vertex_count()),
          cap_(capacity),
          colour_(n_, 0),
          count_(n_ * (capacity + 2), 0),
          sat_(n_, 0),
          free_degree_(n_)
    {
        for (VertexId v = 0; v < n_; ++v)
            free_degree_[v] = static_cast<std::uint32_t>(g.degree(v));
    }

    Color colour(VertexId v) const { return colour_[v]; }
    const std::vector<Color>& colours() const { return colour_; }

    bool blocked(VertexId v, Color c) const { return count_[v * (cap_ + 2) + c] != 0; }

    // Uncoloured vertex of maximum saturation, then maximum uncoloured degree, then index.
    VertexId pick() const
    {
        VertexId best = static_cast<VertexId>(n_);
        for (VertexId v = 0; v < n_; ++v) {
            if (colour_[v] != 0)
                continue;
            if (best == n_ || sat_[v] > sat_[best]
                || (sat_[v] == sat_[best] && free_degree_[v] > free_degree_[best]))
                best = v;
        }
        return best;
    }

    void assign(VertexId v, Color c)
    {
        colour_[v] = c;
        for (VertexId w : g_.neighbors(v)) {
            if (count_[w * (cap_ + 2) + c]++ == 0)
                ++sat_[w];
            --free_degree_[w];
        }
    }

    void unassign(VertexId v)
    {
        const Color c = colour_[v];
        colour_[v] = 0;
        for (VertexId w : g_.neighbors(v)) {
            if (--count_[w * (cap_ + 2) + c] == 0)
                --sat_[w];
            ++free_degree_[w];
        }
    }

private:
    const SimpleGraph& g_;
    std::size_t n_;
    Color cap_;
    std::vector<Color> colour_;
    std::vector<std::uint32_t> count_;
    std::vector<std::uint32_t> sat_;
    std::vector<std::uint32_t> free_degree_;
};

class BranchAndBound {
public:
    BranchAndBound(const SimpleGraph& g, const OracleBudget& budget, Color lower,
                   VertexColoring incumbent)
        : g_(g),
          state_(g, incumbent.q_used),
          lower_(lower),
          best_(incumbent.q_used),
          best_colours_(std::move(incumbent.colors)),
          budget_(budget),
          deadline_(std::chrono::steady_clock::now() + budget.time_limit)
    {
    }

    // True if the search finished (best_ is then optimal).
    bool run()
    {
        search(0, 0);
        return !aborted_;
    }

    Color best() const { return best_; }
    std::vector<Color>& best_colours() { return best_colours_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void search(std::size_t coloured, Color used)
    {
        if (coloured == g_.vertex_count()) {
            best_ = used;
            best_colours_ = state_.colours();
            return;
        }
        if (++nodes_ > budget_.max_nodes
            || ((nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_)) {
            aborted_ = true;
            return;
        }
        const VertexId v = state_.pick();
        // best_ shrinks as better colourings are found, so the bound is re-read.
        for (Color c = 1; c <= std::min<Color>(used + 1, best_ - 1); ++c) {
            if (state_.blocked(v, c))
                continue;
            state_.assign(v, c);
            search(coloured + 1, std::max(used, c));
            state_.unassign(v);
            if (aborted_ || best_ <= lower_)
                return;
        }
    }

    const SimpleGraph& g_;
    SaturationState state_;
    Color lower_;
    Color best_;
    std::vector<Color> best_colours_;
    OracleBudget budget_;
    std::chrono::steady_clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

} // namespace

VertexColoring dsatur_color(const SimpleGraph& g)
{
    const std::size_t n = g.vertex_count();
    SaturationState state(g, static_cast<Color>(g.max_degree() + 1));
    VertexColoring out;
    for (std::size_t step = 0; step < n; ++step) {
        const VertexId v = state.pick();
        Color c = 1;
        while (state.blocked(v, c))
            ++c;
        state.assign(v, c);
        out.q_used = std::max(out.q_used, c);
    }
    out.colors = state.colours();
    return out;
}

ChromaticNumber chromatic_number(const SimpleGraph& g, const OracleBudget& budget, Color known_lower)
{
    budget.validate();
    ChromaticNumber out;
    if (g.vertex_count() == 0)
        return out;
    out.witness = dsatur_color(g);
    out.upper = out.witness.q_used;
    out.lower = std::min(out.upper, std::max(known_lower, greedy_clique_bound(g)));
    if (out.lower == out.upper)
        return out;

    BranchAndBound search(g, budget, out.lower, out.witness);
    const bool finished = search.run();
    out.nodes = search.nodes();
    out.upper = search.best();
    out.witness.colors = std::move(search.best_colours());
    out.witness.q_used = out.upper;
    if (finished)
        out.lower = out.upper;
    return out;
}

ChromaticIndex chromatic_index(const Hypergraph& h, const OracleBudget& budget)
{
    budget.validate();
    std::size_t max_deg = 0;
    for (VertexId x = 0; x < h.vertex_count(); ++x)
        max_deg = std::max(max_deg, vertex_degree(h, x));
    auto r = chromatic_number(line_graph(h), budget, static_cast<Color>(max_deg));
    return {r.lower, r.upper, EdgeColoring{std::move(r.witness.colors), r.witness.q_used}, r.nodes};
}

std::optional<bool> is_critical(const Hypergraph& h, EdgeIndex i, const OracleBudget& budget)
{
    if (h.edge_count() == 0)
        throw InputError("is_critical needs at least one hyperedge");
    auto without = remove_hyperedge(h, i);
    const auto q = chromatic_index(h, budget);
    if (!q.exact())
        return std::nullopt;
    const auto q_minus = chromatic_index(without, budget);
    if (!q_minus.exact())
        return std::nullopt;
    return q_minus.upper + 1 == q.upper;
}

CriticalCore extract_critical(const Hypergraph& h, const OracleBudget& budget)
{
    CriticalCore out;
    out.kept.resize(h.edge_count());
    std::iota(out.kept.begin(), out.kept.end(), EdgeIndex{0});
    out.core = h;
    const auto q = chromatic_index(h, budget);
    out.q = q.upper;
    if (!q.exact())
        return out;

    for (bool removed = true; removed;) {
        removed = false;
        for (EdgeIndex i = 0; i < out.core.edge_count(); ++i) {
            auto candidate = remove_hyperedge(out.core, i);
            const auto qc = chromatic_index(candidate, budget);
            if (!qc.exact())
                return out;
            if (qc.upper == out.q) {
                out.core = std::move(candidate);
                out.kept.erase(out.kept.begin() + static_cast<std::ptrdiff_t>(i));
                removed = true;
                break;
            }
        }
    }
    out.final = true;
    return out;
}

CriticalityReport check_lemma_key(const Hypergraph& h, const OracleBudget& budget)
{
    CriticalityReport report;
    const auto degrees = hyperedge_degrees(h);
    report.entries.resize(h.edge_count());
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        report.entries[i].index = i;
        report.entries[i].edge_degree = degrees[i];
    }
    const auto q = chromatic_index(h, budget);
    if (!q.exact())
        return report;
    report.q = q.upper;
    report.complete = true;
    for (auto& entry : report.entries) {
        const auto qe = chromatic_index(remove_hyperedge(h, entry.index), budget);
        if (!qe.exact()) {
            report.complete = false;
            continue;
        }
        entry.q_without = qe.upper;
        entry.critical = qe.upper + 1 == q.upper;
        if (qe.upper != q.upper && qe.upper + 1 != q.upper)
            report.drop_at_most_one = false;
        if (*entry.critical && q.upper - 1 > entry.edge_degree)
            report.lemma_ok = false;
    }
    return report;
}

} // namespace hyperq
