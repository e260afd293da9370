#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperq/hypergraph.hpp"
#include "hyperq/transforms.hpp"

namespace hyperq {

using Color = std::uint32_t;

/// colors[i] in 1..q_used for hyperedge position i.
struct EdgeColoring {
    std::vector<Color> colors;
    Color q_used = 0;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// colors[v] in 1..q_used for graph vertex v.
struct VertexColoring {
    std::vector<Color> colors;
    Color q_used = 0;

    friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

enum class OrderKind { index, desc_degree, random };

struct OrderStrategy {
    OrderKind kind = OrderKind::desc_degree;
    std::uint64_t seed = 0;

    /// "index", "desc-degree", "random" (uses default_seed) or "random(<seed>)".
    static OrderStrategy parse(std::string_view text, std::uint64_t default_seed = 0);
    std::string to_string() const;
};

/// Colouring must be total (one colour >= 1 per position) or InputError is raised.
bool is_proper(const Hypergraph& h, const EdgeColoring& c);
bool is_proper(const SimpleGraph& g, const VertexColoring& c);

/// Hyperedge positions in the order the strategy prescribes.
std::vector<EdgeIndex> edge_order(const Hypergraph& h, const OrderStrategy& order);

/// First-fit over the given order; uses at most max_i d_H(e_i) + 1 colours.
EdgeColoring greedy_color(const Hypergraph& h, const OrderStrategy& order = {});

/**
 * Constructive Brooks colouring, component by component: a component that
 * is neither complete nor an odd cycle gets at most its maximum degree
 * colours, the two exceptions get exactly Delta + 1.
 */
VertexColoring brooks_color(const SimpleGraph& g);

/// brooks_color on the line graph, read back as a hyperedge colouring.
EdgeColoring brooks_edge_color(const Hypergraph& h);

/// Misra-Gries edge colouring with at most Delta + 1 colours. Accepts only
/// simple graphs written as hypergraphs (2-uniform, no repeated edge).
EdgeColoring vizing_edge_color(const Hypergraph& h);

/// Same, colouring g.edges() in that order.
EdgeColoring vizing_edge_color(const SimpleGraph& g);

/// Relabels colours to 1..k in order of first appearance.
void compact_colors(std::vector<Color>& colors);

} // namespace hyperq
