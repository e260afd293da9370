#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hyperq/errors.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/instances.hpp"
#include "hyperq/rng.hpp"

using namespace hyperq;

namespace {

Hypergraph fano() { return generate(FamilySpec::parse("fano")); }
Hypergraph affine3() { return generate(FamilySpec::parse("affine-plane 3")); }
Hypergraph triangle() { return Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

} // namespace

TEST_CASE("construction canonicalizes and rejects bad hyperedges")
{
    Hypergraph h(4, {{3, 1, 0}});
    CHECK(h.edge(0) == Hyperedge{0, 1, 3});
    CHECK_THROWS_AS(Hypergraph(3, {{}}), InputError);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 0, 1}}), InputError);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), InputError);
    // Duplicates are distinct members of the multiset.
    Hypergraph dup(3, {{0, 1, 2}, {0, 1, 2}});
    CHECK(dup.edge_count() == 2);
}

TEST_CASE("vertex_degree")
{
    const auto f = fano();
    for (VertexId x = 0; x < 7; ++x)
        CHECK(vertex_degree(f, x) == 3);
    CHECK(vertex_degree(Hypergraph(1, {}), 0) == 0);
    CHECK(vertex_degree(Hypergraph(3, {{0, 1, 2}, {0, 1, 2}}), 0) == 2);
    CHECK_THROWS_AS(vertex_degree(f, 7), InputError);
}

TEST_CASE("hyperedge_degree")
{
    const auto f = fano();
    for (EdgeIndex i = 0; i < 7; ++i)
        CHECK(hyperedge_degree(f, i) == 6);
    const auto a = affine3();
    for (EdgeIndex i = 0; i < a.edge_count(); ++i)
        CHECK(hyperedge_degree(a, i) == 9);
    CHECK(hyperedge_degree(Hypergraph(3, {{0, 1, 2}}), 0) == 0);
    // A duplicate is another position, so it counts.
    CHECK(hyperedge_degree(Hypergraph(3, {{0, 1, 2}, {0, 1, 2}}), 0) == 1);
    CHECK_THROWS_AS(hyperedge_degree(f, 7), InputError);
}

TEST_CASE("stats on named instances")
{
    SUBCASE("triangle")
    {
        const auto s = stats(triangle());
        CHECK(s.n == 3);
        CHECK(s.m == 3);
        CHECK(s.rank == 2u);
        CHECK(s.antirank == 2u);
        CHECK(s.max_degree == 2);
        CHECK(s.min_degree == 2);
        CHECK(s.linear);
        CHECK(s.uniform_k == 2u);
        CHECK(s.regular_d == 2u);
        CHECK(s.delta2 == 2);
        CHECK(s.loopless);
        CHECK(s.connected);
    }
    SUBCASE("fano")
    {
        const auto s = stats(fano());
        CHECK(s.n == 7);
        CHECK(s.m == 7);
        CHECK(s.rank == 3u);
        CHECK(s.antirank == 3u);
        CHECK(s.max_degree == 3);
        CHECK(s.min_degree == 3);
        CHECK(s.linear);
        CHECK(s.delta2 == 6);
    }
    SUBCASE("affine plane of order 3")
    {
        const auto s = stats(affine3());
        CHECK(s.n == 9);
        CHECK(s.m == 12);
        CHECK(s.uniform_k == 3u);
        CHECK(s.regular_d == 4u);
        CHECK(s.delta2 == 8);
    }
    SUBCASE("edgeless")
    {
        const auto s = stats(Hypergraph(3, {}));
        CHECK_FALSE(s.rank.has_value());
        CHECK_FALSE(s.antirank.has_value());
        CHECK_FALSE(s.uniform_k.has_value());
        CHECK(s.loopless);
        CHECK(s.delta2 == 0);
        CHECK_FALSE(s.connected);
    }
    SUBCASE("loops are flagged")
    {
        const auto s = stats(Hypergraph(3, {{0}, {0, 1, 2}}));
        CHECK_FALSE(s.loopless);
        CHECK(s.antirank == 1u);
    }
}

TEST_CASE("is_linear")
{
    CHECK(is_linear(fano()));
    CHECK_FALSE(is_linear(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}})));
    CHECK_FALSE(is_linear(Hypergraph(2, {{0, 1}, {0, 1}})));
    // Repeated loops meet in one vertex only.
    CHECK(is_linear(Hypergraph(2, {{0}, {0}})));
}

TEST_CASE("connected_components")
{
    CHECK(connected_components(fano()).size() == 1);
    const auto two = connected_components(Hypergraph(4, {{0, 1}, {2, 3}}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].vertices == std::vector<VertexId>{0, 1});
    CHECK(two[0].edges == std::vector<EdgeIndex>{0});
    CHECK(two[1].edges == std::vector<EdgeIndex>{1});
    const auto iso = connected_components(Hypergraph(3, {}));
    REQUIRE(iso.size() == 3);
    for (const auto& c : iso) {
        CHECK(c.vertices.size() == 1);
        CHECK(c.edges.empty());
    }
}

TEST_CASE("remove_hyperedge")
{
    const auto path = remove_hyperedge(triangle(), 0);
    CHECK(path == Hypergraph(3, {{1, 2}, {0, 2}}));
    const auto none = remove_hyperedge(Hypergraph(3, {{0, 1}}), 0);
    CHECK(none.edge_count() == 0);
    CHECK(none.vertex_count() == 3);
    CHECK(remove_hyperedge(fano(), 3).edge_count() == 6);
    CHECK_THROWS_AS(remove_hyperedge(triangle(), 3), InputError);
}

namespace {

Hypergraph random_instance(Rng& rng)
{
    FamilySpec spec;
    spec.family = Family::random;
    spec.n = rng.between(2, 9);
    spec.m = rng.between(1, 10);
    spec.size_min = 1;
    spec.size_max = rng.between(1, std::min<std::uint64_t>(spec.n, 5));
    spec.seed = rng.next();
    return generate(spec);
}

} // namespace

TEST_CASE("property: edge degree is bounded by incidence sums, with equality when linear")
{
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = random_instance(rng);
        const bool linear = is_linear(h);
        for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
            std::size_t sum = 0;
            for (VertexId x : h.edge(i))
                sum += vertex_degree(h, x) - 1;
            CHECK(hyperedge_degree(h, i) <= sum);
            if (linear)
                CHECK(hyperedge_degree(h, i) == sum);
        }
    }
}

TEST_CASE("property: delta2 >= (ar - 1) * delta1 for loopless hypergraphs")
{
    Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = random_instance(rng);
        const auto s = stats(h);
        if (!s.loopless || s.m == 0)
            continue;
        CHECK(s.delta2 >= (*s.antirank - 1) * s.max_degree);
    }
}

TEST_CASE("property: stats invariant under edge permutation and vertex relabelling")
{
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto h = random_instance(rng);
        auto edges = h.edges();
        rng.shuffle(edges);
        std::vector<VertexId> relabel(h.vertex_count());
        std::iota(relabel.begin(), relabel.end(), VertexId{0});
        rng.shuffle(relabel);
        for (auto& e : edges)
            for (auto& x : e)
                x = relabel[x];
        const Hypergraph g(h.vertex_count(), edges);
        const auto a = stats(h);
        const auto b = stats(g);
        CHECK(a.rank == b.rank);
        CHECK(a.antirank == b.antirank);
        CHECK(a.max_degree == b.max_degree);
        CHECK(a.min_degree == b.min_degree);
        CHECK(a.linear == b.linear);
        CHECK(a.loopless == b.loopless);
        CHECK(a.uniform_k == b.uniform_k);
        CHECK(a.regular_d == b.regular_d);
        CHECK(a.connected == b.connected);
        CHECK(a.delta2 == b.delta2);
    }
}

TEST_CASE("property: removing a hyperedge never increases delta1, delta2, r or decreases ar")
{
    Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const auto h = random_instance(rng);
        const auto before = stats(h);
        const auto i = static_cast<EdgeIndex>(rng.below(h.edge_count()));
        const auto after = stats(remove_hyperedge(h, i));
        CHECK(after.max_degree <= before.max_degree);
        CHECK(after.delta2 <= before.delta2);
        if (after.m > 0) {
            CHECK(*after.rank <= *before.rank);
            CHECK(*after.antirank >= *before.antirank);
        }
    }
}

TEST_CASE("stats invariants hold")
{
    Rng rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = stats(random_instance(rng));
        CHECK(*s.antirank <= *s.rank);
        CHECK(s.min_degree <= s.max_degree);
        CHECK(s.uniform_k.has_value() == (*s.antirank == *s.rank));
        CHECK(s.regular_d.has_value() == (s.min_degree == s.max_degree));
        CHECK(s.loopless == (*s.antirank >= 2));
    }
}
