#include <doctest.h>

#include <algorithm>
#include <set>

#include "hyperq/coloring.hpp"
#include "hyperq/errors.hpp"
#include "hyperq/instances.hpp"
#include "hyperq/rng.hpp"
#include "test_support.hpp"

using namespace hyperq;
using namespace hyperq::testing;

namespace {

Hypergraph family(const char* text) { return generate(FamilySpec::parse(text)); }

bool contiguous(const std::vector<Color>& colors, Color q)
{
    std::set<Color> used(colors.begin(), colors.end());
    return used.size() == q && (used.empty() || (*used.begin() == 1 && *used.rbegin() == q));
}

std::size_t max_edge_degree(const Hypergraph& h)
{
    const auto d = hyperedge_degrees(h);
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool is_complete(const SimpleGraph& g)
{
    const auto n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_odd_cycle(const SimpleGraph& g)
{
    const auto n = g.vertex_count();
    if (n < 3 || n % 2 == 0 || g.edge_count() != n)
        return false;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

// The Brooks contract, component by component.
void check_brooks_contract(const SimpleGraph& g, const VertexColoring& c)
{
    REQUIRE(is_proper(g, c));
    CHECK(contiguous(c.colors, c.q_used));
    Color overall = 0;
    for (const auto& comp : g.components()) {
        const auto sub = g.induced(comp);
        std::set<Color> used;
        for (VertexId v : comp)
            used.insert(c.colors[v]);
        const auto delta = sub.max_degree();
        if (is_complete(sub) || is_odd_cycle(sub))
            CHECK(used.size() == delta + 1);
        else
            CHECK(used.size() <= delta);
        overall = std::max<Color>(overall, static_cast<Color>(used.size()));
    }
    CHECK(c.q_used == overall);
}

} // namespace

TEST_CASE("is_proper")
{
    const auto fano = family("fano");
    CHECK(is_proper(fano, EdgeColoring{{1, 2, 3, 4, 5, 6, 7}, 7}));

    const Hypergraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(is_proper(tri, EdgeColoring{{1, 1, 2}, 2}));

    // Affine plane order 3: the four parallel classes (slope 0, 1, 2, vertical).
    const auto aff = family("affine-plane 3");
    CHECK(is_proper(aff, EdgeColoring{{1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4}, 4}));

    CHECK_THROWS_AS(is_proper(tri, EdgeColoring{{1, 2}, 2}), InputError);
    CHECK_THROWS_AS(is_proper(tri, EdgeColoring{{1, 0, 2}, 2}), InputError);
}

TEST_CASE("order strategies")
{
    CHECK(OrderStrategy::parse("index").kind == OrderKind::index);
    CHECK(OrderStrategy::parse("desc-degree").kind == OrderKind::desc_degree);
    CHECK(OrderStrategy::parse("random", 9).seed == 9);
    CHECK(OrderStrategy::parse("random(42)").seed == 42);
    CHECK(OrderStrategy::parse("random(42)").to_string() == "random(42)");
    CHECK_THROWS_AS(OrderStrategy::parse("sideways"), InputError);
    CHECK_THROWS_AS(OrderStrategy::parse("random(x)"), InputError);

    // Descending hyperedge degree, ties by index.
    const Hypergraph star(5, {{3, 4}, {0, 1}, {0, 2}, {0, 3}});
    CHECK(edge_order(star, {OrderKind::desc_degree, 0}) == std::vector<EdgeIndex>{3, 1, 2, 0});
    const auto a = edge_order(star, {OrderKind::random, 5});
    CHECK(a == edge_order(star, {OrderKind::random, 5}));
}

TEST_CASE("greedy_color")
{
    const Hypergraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(greedy_color(tri, {OrderKind::index, 0}).q_used == 3);
    for (auto kind : {OrderKind::index, OrderKind::desc_degree, OrderKind::random})
        CHECK(greedy_color(Hypergraph(4, {{0, 1}, {2, 3}}), {kind, 3}).q_used == 1);
    for (auto kind : {OrderKind::index, OrderKind::desc_degree, OrderKind::random})
        CHECK(greedy_color(family("fano"), {kind, 3}).q_used == 7);
}

TEST_CASE("property: greedy is proper, contiguous and within max edge degree + 1")
{
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        FamilySpec spec;
        spec.family = Family::random;
        spec.n = rng.between(2, 12);
        spec.m = rng.between(1, 20);
        spec.size_min = 1;
        spec.size_max = rng.between(1, std::min<std::uint64_t>(spec.n, 5));
        spec.seed = rng.next();
        const auto h = generate(spec);
        for (auto kind : {OrderKind::index, OrderKind::desc_degree, OrderKind::random}) {
            const auto c = greedy_color(h, {kind, rng.next()});
            CHECK(is_proper(h, c));
            CHECK(contiguous(c.colors, c.q_used));
            CHECK(c.q_used <= max_edge_degree(h) + 1);
        }
    }
}

TEST_CASE("brooks_color exceptions and named graphs")
{
    CHECK(brooks_color(complete_graph(7)).q_used == 7);
    CHECK(brooks_color(cycle_graph(5)).q_used == 3);
    CHECK(brooks_color(cycle_graph(6)).q_used == 2);
    CHECK(brooks_color(complete_graph(1)).q_used == 1);
    CHECK(brooks_color(SimpleGraph(0)).q_used == 0);

    const auto pet = petersen();
    auto c = brooks_color(pet);
    check_brooks_contract(pet, c);
    CHECK(c.q_used <= 3);

    const auto cut4 = four_regular_with_cut_vertex();
    check_brooks_contract(cut4, brooks_color(cut4));
    const auto bridge3 = cubic_with_bridge();
    check_brooks_contract(bridge3, brooks_color(bridge3));

    // K_{3,3}: 3-regular, 3-connected, not complete.
    SimpleGraph k33(6);
    for (VertexId a = 0; a < 3; ++a)
        for (VertexId b = 3; b < 6; ++b)
            k33.add_edge(a, b);
    check_brooks_contract(k33, brooks_color(k33));

    // Disconnected: K4 plus a 5-cycle plus a path.
    SimpleGraph mix(12);
    for (VertexId i = 0; i < 4; ++i)
        for (VertexId j = i + 1; j < 4; ++j)
            mix.add_edge(i, j);
    for (VertexId i = 0; i < 5; ++i)
        mix.add_edge(4 + i, 4 + (i + 1) % 5);
    mix.add_edge(9, 10);
    mix.add_edge(10, 11);
    auto cm = brooks_color(mix);
    check_brooks_contract(mix, cm);
    CHECK(cm.q_used == 4);
}

TEST_CASE("property: brooks contract on random connected and regular graphs")
{
    Rng rng(32);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = random_connected_graph(rng, rng.between(1, 25), rng.between(1, 6), 10);
        check_brooks_contract(g, brooks_color(g));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = rng.between(3, 6);
        std::size_t n = rng.between(d + 2, 20);
        if (n * d % 2 == 1)
            ++n;
        const auto g = random_regular_connected(rng, n, d);
        check_brooks_contract(g, brooks_color(g));
    }
}

TEST_CASE("brooks_edge_color")
{
    const auto aff = family("affine-plane 3");
    const auto c = brooks_edge_color(aff);
    CHECK(is_proper(aff, c));
    CHECK(c.q_used <= 9);
    CHECK(brooks_edge_color(Hypergraph(3, {{0, 1, 2}})).q_used == 1);
    CHECK(brooks_edge_color(family("fano")).q_used == 7);
    CHECK(brooks_edge_color(Hypergraph(2, {})).q_used == 0);
}

TEST_CASE("vizing_edge_color")
{
    const auto k4 = family("complete-graph 4");
    const auto c = vizing_edge_color(k4);
    CHECK(is_proper(k4, c));
    CHECK(c.q_used <= 4);
    CHECK(c.q_used >= 3);

    const auto c5 = family("cycle 5");
    CHECK(vizing_edge_color(c5).q_used == 3);

    const Hypergraph matching(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(vizing_edge_color(matching).q_used == 1);

    CHECK_THROWS_AS(vizing_edge_color(family("fano")), UnsupportedInput);
    CHECK_THROWS_AS(vizing_edge_color(Hypergraph(2, {{0, 1}, {0, 1}})), UnsupportedInput);
    CHECK_THROWS_AS(vizing_edge_color(Hypergraph(2, {{0}, {0, 1}})), UnsupportedInput);
}

TEST_CASE("property: vizing uses at most delta + 1 colours")
{
    Rng rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_graph(rng, rng.between(1, 30), rng.between(1, 9), 10);
        const auto c = vizing_edge_color(g);
        const auto edges = g.edges();
        std::vector<Hyperedge> as_edges;
        for (auto [u, v] : edges)
            as_edges.push_back({u, v});
        const Hypergraph h(g.vertex_count(), as_edges);
        CHECK(is_proper(h, c));
        CHECK(c.q_used <= g.max_degree() + 1);
        CHECK(contiguous(c.colors, c.q_used));
    }
}

TEST_CASE("colourers are deterministic")
{
    Rng rng(34);
    const auto g = random_connected_graph(rng, 30, 3, 10);
    CHECK(brooks_color(g) == brooks_color(g));
    CHECK(vizing_edge_color(g) == vizing_edge_color(g));
    const auto aff = family("affine-plane 5");
    CHECK(greedy_color(aff, {OrderKind::random, 8}) == greedy_color(aff, {OrderKind::random, 8}));
}
