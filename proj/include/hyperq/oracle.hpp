#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperq/coloring.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/transforms.hpp"

namespace hyperq {

/// Limits for one exact search. Both must be positive.
struct OracleBudget {
    std::uint64_t max_nodes = 10'000'000;
    std::chrono::milliseconds time_limit{30'000};

    /// Defaults, overridden by HYPERQ_MAX_NODES / HYPERQ_TIME_LIMIT_MS when set.
    static OracleBudget from_env();
    void validate() const;
};

/// lower == upper means exact; otherwise the search ran out of budget and
/// [lower, upper] brackets the true value. witness always uses `upper` colours.
struct ChromaticNumber {
    Color lower = 0;
    Color upper = 0;
    VertexColoring witness;
    std::uint64_t nodes = 0;

    bool exact() const noexcept { return lower == upper; }
};

struct ChromaticIndex {
    Color lower = 0;
    Color upper = 0;
    EdgeColoring witness;
    std::uint64_t nodes = 0;

    bool exact() const noexcept { return lower == upper; }
};

/// Size of a clique grown greedily from every vertex, best taken.
Color greedy_clique_bound(const SimpleGraph& g);

/// DSATUR first-fit colouring (the search's initial incumbent).
VertexColoring dsatur_color(const SimpleGraph& g);

/**
 * Exact chromatic number by DSATUR branch and bound: saturation-degree
 * branching, new colours only as max-used + 1, clique lower bound and
 * DSATUR upper bound. `known_lower` is any externally proven lower bound.
 */
ChromaticNumber chromatic_number(const SimpleGraph& g, const OracleBudget& budget = {},
                                 Color known_lower = 0);

/// q(H) as the chromatic number of the line graph; Delta(H) seeds the lower bound.
ChromaticIndex chromatic_index(const Hypergraph& h, const OracleBudget& budget = {});

/// nullopt when either chromatic index was not settled within budget.
std::optional<bool> is_critical(const Hypergraph& h, EdgeIndex i, const OracleBudget& budget = {});

struct CriticalCore {
    Hypergraph core;
    std::vector<EdgeIndex> kept; // positions in the input, ascending
    Color q = 0;
    bool final = false; // false if a budget overrun stopped the reduction
};

/// Drops the lowest position whose removal keeps q, rescanning from the
/// start after each drop, until every remaining hyperedge is critical.
CriticalCore extract_critical(const Hypergraph& h, const OracleBudget& budget = {});

struct CriticalityEntry {
    EdgeIndex index = 0;
    std::size_t edge_degree = 0;
    std::optional<Color> q_without; // q(H \ e)
    std::optional<bool> critical;
};

struct CriticalityReport {
    std::optional<Color> q;
    std::vector<CriticalityEntry> entries;
    bool complete = false;        // every entry settled
    bool lemma_ok = true;         // q - 1 <= d(e) for every settled critical e
    bool drop_at_most_one = true; // q(H \ e) in {q - 1, q} for every settled e
};

CriticalityReport check_lemma_key(const Hypergraph& h, const OracleBudget& budget = {});

} // namespace hyperq
