#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hyperq {

using VertexId = std::uint32_t;
using EdgeIndex = std::size_t;

// Strictly increasing vertex ids.
using Hyperedge = std::vector<VertexId>;

/**
 * Finite hypergraph H = (V, E) with V = {0, ..., n-1} and E a multiset of
 * non-empty hyperedges. Hyperedges are addressed by position, so repeated
 * hyperedges stay distinct members of E. Immutable once constructed.
 */
class Hypergraph {
public:
    Hypergraph() = default;

    /// Edges are canonicalized (sorted). Empty edges, out-of-range ids and
    /// a vertex repeated inside one edge raise InputError.
    Hypergraph(std::size_t vertex_count, std::vector<Hyperedge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
    const Hyperedge& edge(EdgeIndex i) const;

    /// Positions of the hyperedges containing x, ascending.
    std::span<const EdgeIndex> incident_edges(VertexId x) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Hyperedge> edges_;
    std::vector<std::vector<EdgeIndex>> incidence_;
};

struct HypergraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<std::size_t> rank;     // absent when m = 0
    std::optional<std::size_t> antirank; // absent when m = 0
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
    bool loopless = true;
    bool linear = true;
    std::optional<std::size_t> uniform_k;
    std::optional<std::size_t> regular_d;
    bool connected = true;
    std::size_t delta2 = 0; // maximum degree of the 2-section
};

struct Component {
    std::vector<VertexId> vertices;
    std::vector<EdgeIndex> edges;
};

std::size_t vertex_degree(const Hypergraph& h, VertexId x);

/// Number of other hyperedge positions meeting edge i.
std::size_t hyperedge_degree(const Hypergraph& h, EdgeIndex i);

/// hyperedge_degree for every position at once.
std::vector<std::size_t> hyperedge_degrees(const Hypergraph& h);

bool is_linear(const Hypergraph& h);
bool is_loopless(const Hypergraph& h);

/// Components ordered by smallest vertex; isolated vertices are singletons.
std::vector<Component> connected_components(const Hypergraph& h);

Hypergraph remove_hyperedge(const Hypergraph& h, EdgeIndex i);

/// Keeps only the given positions, in the given order.
Hypergraph partial_hypergraph(const Hypergraph& h, std::span<const EdgeIndex> keep);

HypergraphStats stats(const Hypergraph& h);

/// Size of the intersection of two canonical hyperedges.
std::size_t intersection_size(const Hyperedge& a, const Hyperedge& b);
bool intersects(const Hyperedge& a, const Hyperedge& b);

} // namespace hyperq
