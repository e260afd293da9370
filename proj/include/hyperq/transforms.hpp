#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hyperq/hypergraph.hpp"

namespace hyperq {

/// Loopless multigraph with explicit pair multiplicities.
class Multigraph {
public:
    using Pair = std::pair<VertexId, VertexId>; // first < second

    explicit Multigraph(std::size_t vertex_count = 0) : degree_(vertex_count, 0) {}

    void add_edge(VertexId x, VertexId y, std::size_t multiplicity = 1);

    std::size_t vertex_count() const noexcept { return degree_.size(); }
    std::size_t multiplicity(VertexId x, VertexId y) const;
    std::size_t degree(VertexId x) const { return degree_.at(x); }
    std::size_t max_degree() const noexcept;
    const std::map<Pair, std::size_t>& pairs() const noexcept { return pairs_; }

private:
    std::map<Pair, std::size_t> pairs_;
    std::vector<std::size_t> degree_;
};

/**
 * Simple undirected graph. Keeps sorted adjacency lists alongside dense
 * bitset rows; the rows are what the exact colouring search intersects.
 */
class SimpleGraph {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    explicit SimpleGraph(std::size_t vertex_count = 0);

    /// Idempotent; self-loops raise InputError.
    void add_edge(VertexId u, VertexId v);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool adjacent(VertexId u, VertexId v) const;
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
    std::size_t max_degree() const noexcept;

    std::size_t words_per_row() const noexcept { return words_; }
    std::span<const Word> row(VertexId v) const
    {
        return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    SimpleGraph induced(std::span<const VertexId> vertices) const;

    /// Vertex sets of connected components, each ascending, ordered by minimum.
    std::vector<std::vector<VertexId>> components() const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b)
    {
        return a.adjacency_ == b.adjacency_;
    }

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t words_ = 0;
    std::vector<Word> rows_;
    std::size_t edge_count_ = 0;
};

/// [H]_2: multiplicity of {x,y} is the number of hyperedges containing both.
Multigraph two_section(const Hypergraph& h);

/// Max over x of sum over hyperedges b containing x of (|b| - 1).
std::size_t max_degree_two_section(const Hypergraph& h);

/// Intersection graph of the hyperedge positions (the line graph for linear H).
SimpleGraph line_graph(const Hypergraph& h);

} // namespace hyperq
