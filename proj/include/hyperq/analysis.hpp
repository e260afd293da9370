#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hyperq/coloring.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/oracle.hpp"

namespace hyperq {

/// Which known result licenses q(H) <= Delta_2 + 1 for an instance.
///   THM1   loopless, ar^2 >= Delta_2 + 1
///   THM2   linear, k-uniform, (k+1)-regular, k >= 2
///   THM3   loopless, Delta_1 <= sqrt(Delta_2 + 1) + 1
///   RK61   loopless, ar^2 > Delta_2 + 1 (greedy bound regime)
///   RK62   r (Delta_1 - 1) <= Delta_2
///   U65_*  items of the uniform linear condition list
///   OPEN   none of the above
enum class Tag { THM1, THM2, THM3, RK61, RK62, U65_1, U65_2, U65_3, U65_4, OPEN };

using TagSet = std::set<Tag>;

std::string_view to_string(Tag tag);
std::string join_tags(const TagSet& tags);

struct BoundSet {
    std::size_t bf = 1;                                // Delta_2 + 1
    std::optional<std::int64_t> greedy61;              // absent if m = 0 or loops
    std::optional<std::size_t> linegraph62;            // r (Delta_1 - 1) + 1, absent if m = 0
    std::optional<std::size_t> max_edge_degree_plus1;  // absent if m = 0
};

// Integer forms of the square-root hypotheses, on raw metrics.
bool antirank_condition(std::uint64_t antirank, std::uint64_t delta2);    // ar >= sqrt(D2 + 1)
bool max_degree_condition(std::uint64_t max_degree, std::uint64_t delta2); // D1 <= sqrt(D2 + 1) + 1
bool rank_condition(std::uint64_t rank, std::uint64_t max_degree, std::uint64_t delta2); // r (D1 - 1) <= D2

/// max over ar <= k <= r of k * (floor(D2 / (k - 1)) - 1) + 1; antirank >= 2.
std::int64_t greedy_bound_value(std::uint64_t antirank, std::uint64_t rank, std::uint64_t delta2);

std::size_t bf_bound(const Hypergraph& h);

/// UnsupportedInput if m = 0 or H has a loop.
std::int64_t greedy_bound(const Hypergraph& h);

/// InputError if m = 0.
std::size_t linegraph_bound(const Hypergraph& h);

BoundSet bounds(const Hypergraph& h);

bool check_thm1(const Hypergraph& h);
bool check_thm2(const Hypergraph& h);
bool check_thm3(const Hypergraph& h);

/// InputError if m = 0.
bool check_rk62(const Hypergraph& h);

/**
 * Conditions for uniform linear hypergraphs: U65_1 (k = 2), U65_2
 * (k^2 >= D2 + 1), U65_3 (D2 = k^2), U65_4 (k >= 3 and k (D1 - 1) <= D2).
 * The side constraints 3 <= k < sqrt(D2) < D1 - 1 that usually accompany
 * item 4 only describe where it is the sole applicable item; the chain
 * q <= k (D1 - 1) + 1 <= D2 + 1 needs nothing beyond the inequality, so
 * they are not required. OPEN when no item applies.
 * UnsupportedInput unless H is linear, uniform and has a hyperedge.
 */
TagSet classify_uniform(const Hypergraph& h);

struct InequalityCheck {
    std::string name;
    bool holds = true;
    std::string detail;
};

struct InequalityReport {
    std::vector<InequalityCheck> checks;
    std::vector<std::size_t> edge_degree;       // d_H(e)
    std::vector<std::size_t> edge_incidence_sum; // sum over x in e of (deg(x) - 1)

    bool all_hold() const;
};

/// Evaluates the structural identities and inequalities that hold for every
/// instance (and, under the THM2 hypotheses, the counting identities).
/// A failed check is a bug, never a property of the input.
InequalityReport inequality_suite(const Hypergraph& h);

enum class Status { holds, violated, unresolved, out_of_scope };
std::string_view to_string(Status status);

struct Verdict {
    HypergraphStats stats;
    BoundSet bounds;
    TagSet applicable;
    Color q_lower = 0;
    Color q_upper = 0;
    bool q_exact = false;
    EdgeColoring witness; // q_upper colours
    std::string witness_method;
    bool witness_proper = false;
    bool in_scope = false; // loopless and (linear or some theorem applies)
    Status status = Status::unresolved;
    std::optional<bool> efl_holds; // q <= n, linear instances only
    std::string alarm;             // "", "counterexample" or "internal-inconsistency"
    bool greedy61_exceeded = false; // exact q above the quoted greedy formula; flagged only
    std::uint64_t nodes = 0;
};

/// Assembles stats, bounds and applicable results, then settles q (exact
/// search when use_exact, else clique bound vs. best constructive colouring).
/// HOLDS only with a proper witness using at most D2 + 1 colours; VIOLATED
/// only for an exact q above D2 + 1 on an in-scope instance.
Verdict verify_conjecture(const Hypergraph& h, const OracleBudget& budget = {}, bool use_exact = true);

} // namespace hyperq
