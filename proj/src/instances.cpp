#include "hyperq/instances.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <vector>

#include "hyperq/errors.hpp"
#include "hyperq/rng.hpp"

namespace hyperq {

namespace {

struct FamilyName {
    Family family;
    std::string_view name;
    std::size_t params; // including the optional seed
};

constexpr std::array<FamilyName, 8> family_names{{
    {Family::complete_graph, "complete-graph", 1},
    {Family::cycle, "cycle", 1},
    {Family::fano, "fano", 0},
    {Family::affine_plane, "affine-plane", 1},
    {Family::projective_plane, "projective-plane", 1},
    {Family::steiner_triple, "steiner-triple", 1},
    {Family::random_linear, "random-linear", 4},
    {Family::random, "random", 4},
}};

std::vector<std::string_view> tokenize(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto sep = [](char c) { return c == ' ' || c == ':' || c == '\t'; };
    while (i < text.size()) {
        while (i < text.size() && sep(text[i]))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !sep(text[j]))
            ++j;
        if (j > i)
            out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t number(std::string_view tok, std::string_view what)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
        throw InputError("family parameter " + std::string(what) + ": '" + std::string(tok)
                         + "' is not a non-negative integer");
    return v;
}

std::pair<std::uint64_t, std::uint64_t> range(std::string_view tok)
{
    const auto dots = tok.find("..");
    if (dots == std::string_view::npos) {
        const auto v = number(tok, "size-range");
        return {v, v};
    }
    return {number(tok.substr(0, dots), "size-range"), number(tok.substr(dots + 2), "size-range")};
}

} // namespace

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

FamilySpec FamilySpec::parse(std::string_view text, std::uint64_t default_seed)
{
    const auto tok = tokenize(text);
    if (tok.empty())
        throw InputError("empty family specification");
    auto it = std::find_if(family_names.begin(), family_names.end(),
                           [&](const FamilyName& f) { return f.name == tok[0]; });
    if (it == family_names.end())
        throw InputError("unknown family '" + std::string(tok[0]) + "'");

    const bool seeded = it->family == Family::random_linear || it->family == Family::random;
    const std::size_t given = tok.size() - 1;
    if (given != it->params && !(seeded && given + 1 == it->params))
        throw InputError("family '" + std::string(it->name) + "' takes "
                         + std::to_string(it->params) + " parameters, got " + std::to_string(given));

    FamilySpec spec;
    spec.family = it->family;
    spec.seed = default_seed;
    switch (spec.family) {
    case Family::complete_graph:
    case Family::cycle:
    case Family::steiner_triple:
        spec.n = number(tok[1], "n");
        break;
    case Family::affine_plane:
    case Family::projective_plane:
        spec.n = number(tok[1], "p");
        break;
    case Family::fano:
        break;
    case Family::random_linear:
        spec.n = number(tok[1], "n");
        spec.m = number(tok[2], "m");
        spec.k = number(tok[3], "k");
        if (given == 4)
            spec.seed = number(tok[4], "seed");
        break;
    case Family::random:
        spec.n = number(tok[1], "n");
        spec.m = number(tok[2], "m");
        std::tie(spec.size_min, spec.size_max) = range(tok[3]);
        if (given == 4)
            spec.seed = number(tok[4], "seed");
        break;
    }
    return spec;
}

std::string FamilySpec::to_string() const
{
    auto name = std::find_if(family_names.begin(), family_names.end(),
                             [&](const FamilyName& f) { return f.family == family; })
                    ->name;
    std::string out(name);
    auto add = [&](std::uint64_t v) { out += ' ' + std::to_string(v); };
    switch (family) {
    case Family::fano:
        break;
    case Family::random_linear:
        add(n);
        add(m);
        add(k);
        add(seed);
        break;
    case Family::random:
        add(n);
        add(m);
        out += ' ' + std::to_string(size_min) + ".." + std::to_string(size_max);
        add(seed);
        break;
    default:
        add(n);
        break;
    }
    return out;
}

void FamilySpec::validate() const
{
    switch (family) {
    case Family::complete_graph:
        if (n < 1)
            throw GenerationError("complete-graph needs n >= 1");
        break;
    case Family::cycle:
        if (n < 3)
            throw GenerationError("cycle needs n >= 3");
        break;
    case Family::fano:
        break;
    case Family::affine_plane:
    case Family::projective_plane:
        if (!is_prime(n))
            throw GenerationError("plane order " + std::to_string(n) + " is not prime");
        break;
    case Family::steiner_triple:
        if (n % 6 != 3)
            throw GenerationError("steiner-triple needs n = 3 (mod 6), got " + std::to_string(n));
        break;
    case Family::random_linear:
        if (n < 1 || m < 1 || k < 1)
            throw GenerationError("random-linear needs positive n, m, k");
        if (k > n)
            throw GenerationError("random-linear: k = " + std::to_string(k) + " exceeds n = "
                                  + std::to_string(n));
        // Each hyperedge covers k(k-1)/2 vertex pairs, no pair twice.
        if (k >= 2 && m * (k * (k - 1) / 2) > n * (n - 1) / 2)
            throw GenerationError("random-linear: infeasible, " + std::to_string(m)
                                  + " hyperedges need more vertex pairs than n = "
                                  + std::to_string(n) + " provides");
        if (k == 1 && m > n)
            throw GenerationError("random-linear: infeasible, more than n distinct loops");
        break;
    case Family::random:
        if (n < 1 || m < 1)
            throw GenerationError("random needs positive n and m");
        if (size_min < 1 || size_min > size_max || size_max > n)
            throw GenerationError("random needs 1 <= size-min <= size-max <= n");
        break;
    }
}

namespace {

Hypergraph complete_graph(std::uint64_t n)
{
    std::vector<Hyperedge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Hypergraph(n, std::move(edges));
}

Hypergraph cycle(std::uint64_t n)
{
    std::vector<Hyperedge> edges;
    for (VertexId u = 0; u < n; ++u)
        edges.push_back({u, static_cast<VertexId>((u + 1) % n)});
    return Hypergraph(n, std::move(edges));
}

Hypergraph fano()
{
    return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

// Point (x, y) is vertex x * p + y. Lines y = s x + b by slope then
// intercept, then the p vertical lines.
Hypergraph affine_plane(std::uint64_t p)
{
    std::vector<Hyperedge> edges;
    auto id = [p](std::uint64_t x, std::uint64_t y) { return static_cast<VertexId>(x * p + y); };
    for (std::uint64_t s = 0; s < p; ++s) {
        for (std::uint64_t b = 0; b < p; ++b) {
            Hyperedge line;
            for (std::uint64_t x = 0; x < p; ++x)
                line.push_back(id(x, (s * x + b) % p));
            edges.push_back(std::move(line));
        }
    }
    for (std::uint64_t x = 0; x < p; ++x) {
        Hyperedge line;
        for (std::uint64_t y = 0; y < p; ++y)
            line.push_back(id(x, y));
        edges.push_back(std::move(line));
    }
    return Hypergraph(p * p, std::move(edges));
}

// Points and lines are the normalized nonzero vectors of (Z_p)^3 (first
// nonzero coordinate 1) in lexicographic order; incidence is a zero dot product.
Hypergraph projective_plane(std::uint64_t p)
{
    std::vector<std::array<std::uint64_t, 3>> points;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b)
            for (std::uint64_t c = 0; c < p; ++c) {
                const std::uint64_t lead = a != 0 ? a : (b != 0 ? b : c);
                if (lead == 1)
                    points.push_back({a, b, c});
            }
    std::vector<Hyperedge> edges;
    for (const auto& line : points) {
        Hyperedge e;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& pt = points[i];
            if ((line[0] * pt[0] + line[1] * pt[1] + line[2] * pt[2]) % p == 0)
                e.push_back(static_cast<VertexId>(i));
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(points.size(), std::move(edges));
}

// Bose construction over Z_v x {0,1,2}, v = n / 3, point (x, i) = i * v + x,
// with the idempotent commutative quasigroup x o y = (x + y) (v + 1) / 2 mod v.
Hypergraph steiner_triple(std::uint64_t n)
{
    const std::uint64_t v = n / 3;
    const std::uint64_t half = (v + 1) / 2;
    auto id = [v](std::uint64_t x, std::uint64_t i) { return static_cast<VertexId>(i * v + x); };
    std::vector<Hyperedge> edges;
    for (std::uint64_t x = 0; x < v; ++x)
        edges.push_back({id(x, 0), id(x, 1), id(x, 2)});
    for (std::uint64_t x = 0; x < v; ++x)
        for (std::uint64_t y = x + 1; y < v; ++y)
            for (std::uint64_t i = 0; i < 3; ++i) {
                const std::uint64_t z = ((x + y) * half) % v;
                edges.push_back({id(x, i), id(y, i), id(z, (i + 1) % 3)});
            }
    return Hypergraph(n, std::move(edges));
}

// k distinct vertices: partial Fisher-Yates over 0..n-1, then sorted.
Hyperedge sample_set(Rng& rng, std::uint64_t n, std::uint64_t k, std::vector<VertexId>& pool)
{
    pool.resize(n);
    std::iota(pool.begin(), pool.end(), VertexId{0});
    for (std::uint64_t i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + rng.below(n - i)]);
    Hyperedge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(e.begin(), e.end());
    return e;
}

Hypergraph random_linear(const FamilySpec& spec)
{
    Rng rng(spec.seed);
    const std::uint64_t cap = 200 * spec.m + 1000;
    std::vector<Hyperedge> accepted;
    std::vector<VertexId> pool;
    std::uint64_t attempts = 0;
    while (accepted.size() < spec.m) {
        if (attempts++ == cap)
            throw GenerationError("random-linear: retry cap of " + std::to_string(cap)
                                  + " samples exceeded with " + std::to_string(accepted.size())
                                  + " of " + std::to_string(spec.m) + " hyperedges placed");
        auto e = sample_set(rng, spec.n, spec.k, pool);
        const bool ok = std::all_of(accepted.begin(), accepted.end(), [&](const Hyperedge& a) {
            return a != e && intersection_size(a, e) <= 1;
        });
        if (ok)
            accepted.push_back(std::move(e));
    }
    return Hypergraph(spec.n, std::move(accepted));
}

Hypergraph random_hypergraph(const FamilySpec& spec)
{
    Rng rng(spec.seed);
    std::vector<Hyperedge> edges;
    std::vector<VertexId> pool;
    for (std::uint64_t i = 0; i < spec.m; ++i) {
        const std::uint64_t size = rng.between(spec.size_min, spec.size_max);
        edges.push_back(sample_set(rng, spec.n, size, pool));
    }
    return Hypergraph(spec.n, std::move(edges));
}

} // namespace

Hypergraph generate(const FamilySpec& spec)
{
    spec.validate();
    switch (spec.family) {
    case Family::complete_graph:
        return complete_graph(spec.n);
    case Family::cycle:
        return cycle(spec.n);
    case Family::fano:
        return fano();
    case Family::affine_plane:
        return affine_plane(spec.n);
    case Family::projective_plane:
        return projective_plane(spec.n);
    case Family::steiner_triple:
        return steiner_triple(spec.n);
    case Family::random_linear:
        return random_linear(spec);
    case Family::random:
        return random_hypergraph(spec);
    }
    throw GenerationError("unhandled family");
}

} // namespace hyperq
