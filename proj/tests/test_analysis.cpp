#include <doctest.h>

#include "hyperq/analysis.hpp"
#include "hyperq/errors.hpp"
#include "hyperq/instances.hpp"
#include "hyperq/rng.hpp"

using namespace hyperq;

namespace {

Hypergraph family(const char* text) { return generate(FamilySpec::parse(text)); }

const Hypergraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
const Hypergraph pendant(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3, 4, 5}});
const Hypergraph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});

} // namespace

TEST_CASE("bf_bound")
{
    CHECK(bf_bound(family("fano")) == 7);
    CHECK(bf_bound(family("affine-plane 3")) == 9);
    CHECK(bf_bound(Hypergraph(4, {})) == 1);
}

TEST_CASE("greedy_bound")
{
    CHECK(greedy_bound(family("fano")) == 7);
    CHECK(greedy_bound(family("affine-plane 3")) == 10);
    CHECK(greedy_bound(triangle) == 3);
    CHECK_THROWS_AS(greedy_bound(Hypergraph(3, {{0}, {0, 1}})), UnsupportedInput);
    CHECK_THROWS_AS(greedy_bound(Hypergraph(3, {})), UnsupportedInput);
    // Mixed sizes take the max over k in [ar, r]: D2 = 4 at vertex 2 here;
    // k = 2 gives 2 * (4 - 1) + 1 = 7, k = 3 gives 3 * (2 - 1) + 1 = 4.
    CHECK(greedy_bound(Hypergraph(5, {{0, 2}, {1, 2}, {2, 3, 4}})) == 7);
}

TEST_CASE("linegraph_bound")
{
    CHECK(linegraph_bound(family("fano")) == 7);
    CHECK(linegraph_bound(family("affine-plane 3")) == 10);
    CHECK(linegraph_bound(triangle) == 3);
    CHECK_THROWS_AS(linegraph_bound(Hypergraph(2, {})), InputError);
}

TEST_CASE("check_thm1")
{
    CHECK(check_thm1(family("fano")));
    CHECK(check_thm1(family("affine-plane 3")));
    CHECK(stats(pendant).delta2 == 5);
    CHECK_FALSE(check_thm1(pendant));
    CHECK_FALSE(check_thm1(Hypergraph(3, {{0}, {0, 1, 2}})));
}

TEST_CASE("check_thm2")
{
    CHECK(check_thm2(family("affine-plane 3")));
    CHECK_FALSE(check_thm2(family("fano")));
    CHECK(check_thm2(family("complete-graph 4")));
    CHECK_FALSE(check_thm2(Hypergraph(3, {{0}, {1}, {2}})));
}

TEST_CASE("check_thm3")
{
    CHECK(check_thm3(family("fano")));
    CHECK(check_thm3(family("affine-plane 3")));
    const auto s = stats(star);
    CHECK(s.max_degree == 5);
    CHECK(s.delta2 == 5);
    CHECK_FALSE(check_thm3(star));
}

TEST_CASE("check_rk62")
{
    CHECK(check_rk62(family("fano")));
    CHECK_FALSE(check_rk62(family("affine-plane 3")));
    CHECK(check_rk62(Hypergraph(4, {{0, 1}, {2, 3}})));
    CHECK_THROWS_AS(check_rk62(Hypergraph(4, {})), InputError);
}

TEST_CASE("classify_uniform")
{
    const auto k4 = classify_uniform(family("complete-graph 4"));
    CHECK(k4.contains(Tag::U65_1));

    const auto f = classify_uniform(family("fano"));
    CHECK(f.contains(Tag::U65_2));
    CHECK(f.contains(Tag::U65_4));
    CHECK_FALSE(f.contains(Tag::OPEN));

    const auto a = classify_uniform(family("affine-plane 3"));
    CHECK(a.contains(Tag::U65_2));
    CHECK_FALSE(a.contains(Tag::U65_3));
    CHECK_FALSE(a.contains(Tag::U65_4));

    // K_5 as a graph: D2 = 4 = k^2.
    CHECK(classify_uniform(family("complete-graph 5")).contains(Tag::U65_3));

    // Affine plane of order 5 plus nothing else: k = 5, D2 = 24, item 2.
    CHECK(classify_uniform(family("affine-plane 5")).contains(Tag::U65_2));

    CHECK_THROWS_AS(classify_uniform(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}})), UnsupportedInput);
    CHECK_THROWS_AS(classify_uniform(Hypergraph(4, {{0, 1, 2}, {2, 3}})), UnsupportedInput);
    CHECK_THROWS_AS(classify_uniform(Hypergraph(4, {})), UnsupportedInput);
}

TEST_CASE("classify_uniform reports OPEN when nothing applies")
{
    // 3-uniform linear with D1 large: a "sunflower" of 6 triples through
    // vertex 0 gives D1 = 6, D2 = 12; 9 < 13, 12 != 9, 3 * 5 = 15 > 12.
    std::vector<Hyperedge> petals;
    for (VertexId i = 0; i < 6; ++i)
        petals.push_back({0, 1 + 2 * i, 2 + 2 * i});
    const Hypergraph sunflower(13, petals);
    CHECK(classify_uniform(sunflower) == TagSet{Tag::OPEN});
}

TEST_CASE("consistency: U65_2 iff THM1 on uniform linear inputs")
{
    Rng rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        FamilySpec spec;
        spec.family = Family::random_linear;
        spec.k = rng.between(2, 4);
        spec.n = rng.between(spec.k + 2, 14);
        spec.m = rng.between(1, 6);
        spec.seed = rng.next();
        Hypergraph h;
        try {
            h = generate(spec);
        } catch (const GenerationError&) {
            continue;
        }
        CHECK(classify_uniform(h).contains(Tag::U65_2) == check_thm1(h));
    }
}

TEST_CASE("inequality_suite")
{
    SUBCASE("affine plane order 3")
    {
        const auto r = inequality_suite(family("affine-plane 3"));
        CHECK(r.all_hold());
        bool counting = false;
        for (const auto& c : r.checks) {
            if (c.name == "k * m == (k + 1) * n") {
                counting = true;
                CHECK(c.detail == "36 == 36");
            }
        }
        CHECK(counting);
        for (auto d : r.edge_degree)
            CHECK(d == 9);
    }
    SUBCASE("fano")
    {
        const auto r = inequality_suite(family("fano"));
        CHECK(r.all_hold());
        CHECK(r.edge_degree == r.edge_incidence_sum);
        CHECK(r.checks.size() == 3);
    }
    SUBCASE("non-linear is strict")
    {
        const auto r = inequality_suite(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}));
        CHECK(r.all_hold());
        CHECK(r.edge_degree[0] == 1);
        CHECK(r.edge_incidence_sum[0] == 2);
    }
}

TEST_CASE("verify_conjecture")
{
    SUBCASE("fano")
    {
        const auto v = verify_conjecture(family("fano"));
        CHECK(v.q_exact);
        CHECK(v.q_upper == 7);
        CHECK(v.bounds.bf == 7);
        CHECK(v.applicable.contains(Tag::THM1));
        CHECK(v.applicable.contains(Tag::THM3));
        CHECK(v.status == Status::holds);
        CHECK(v.efl_holds == true);
        CHECK(v.witness_proper);
    }
    SUBCASE("affine plane order 3")
    {
        const auto v = verify_conjecture(family("affine-plane 3"));
        CHECK(v.q_upper == 4);
        CHECK(v.q_exact);
        for (Tag t : {Tag::THM1, Tag::THM2, Tag::THM3})
            CHECK(v.applicable.contains(t));
        CHECK(v.status == Status::holds);
    }
    SUBCASE("projective plane order 3")
    {
        const auto v = verify_conjecture(family("projective-plane 3"));
        CHECK(v.stats.delta2 == 12);
        CHECK(v.q_upper == 13);
        CHECK(v.q_exact);
        CHECK(v.status == Status::holds);
    }
    SUBCASE("edgeless")
    {
        const auto v = verify_conjecture(Hypergraph(3, {}));
        CHECK(v.q_upper == 0);
        CHECK(v.status == Status::holds);
        CHECK(v.applicable.empty());
    }
    SUBCASE("out of scope: repeated loops exceed D2 + 1")
    {
        const auto v = verify_conjecture(Hypergraph(1, {{0}, {0}}));
        CHECK(v.q_upper == 2);
        CHECK(v.status == Status::out_of_scope);
        CHECK(v.alarm.empty());
    }
    SUBCASE("out of scope: doubled triangle (Shannon multigraph)")
    {
        const Hypergraph shannon(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}});
        const auto v = verify_conjecture(shannon);
        CHECK(v.q_upper == 6);
        CHECK(v.bounds.bf == 5);
        CHECK(v.status == Status::out_of_scope);
    }
    SUBCASE("non-exact mode brackets with a witness")
    {
        const auto v = verify_conjecture(family("affine-plane 3"), {}, false);
        CHECK(v.q_lower == 4);
        CHECK(v.q_upper <= 9);
        CHECK(v.status == Status::holds);
        CHECK(v.witness_proper);
    }
    SUBCASE("OPEN when no result applies")
    {
        std::vector<Hyperedge> petals;
        for (VertexId i = 0; i < 6; ++i)
            petals.push_back({0, 1 + 2 * i, 2 + 2 * i});
        const auto v = verify_conjecture(Hypergraph(13, petals));
        CHECK(v.applicable == TagSet{Tag::OPEN});
        CHECK(v.q_upper == 6);
        CHECK(v.status == Status::holds);
    }
}

TEST_CASE("property: licensed bounds hold against exact q")
{
    Rng rng(52);
    for (int trial = 0; trial < 150; ++trial) {
        FamilySpec spec;
        spec.family = Family::random;
        spec.n = rng.between(3, 9);
        spec.m = rng.between(1, 9);
        spec.size_min = 2;
        spec.size_max = rng.between(2, std::min<std::uint64_t>(spec.n, 5));
        spec.seed = rng.next();
        const auto h = generate(spec);
        const auto v = verify_conjecture(h);
        REQUIRE(v.q_exact);
        CHECK(v.alarm.empty());
        CHECK(v.q_upper <= *v.bounds.linegraph62);
        CHECK(v.q_upper <= *v.bounds.max_edge_degree_plus1);
        if (v.applicable.contains(Tag::RK61)) {
            CHECK(static_cast<std::int64_t>(v.q_upper) <= *v.bounds.greedy61);
            CHECK_FALSE(v.greedy61_exceeded);
        }
        for (Tag t : {Tag::THM1, Tag::THM2, Tag::THM3, Tag::RK62})
            if (v.applicable.contains(t))
                CHECK(v.q_upper <= v.bounds.bf);
    }
}
