#include "hyperq/transforms.hpp"

#include <algorithm>
#include <string>

#include "hyperq/errors.hpp"

namespace hyperq {

void Multigraph::add_edge(VertexId x, VertexId y, std::size_t multiplicity)
{
    if (x == y)
        throw InputError("multigraph self-loop at vertex " + std::to_string(x));
    if (x >= degree_.size() || y >= degree_.size())
        throw InputError("multigraph vertex out of range");
    if (multiplicity == 0)
        return;
    if (y < x)
        std::swap(x, y);
    pairs_[{x, y}] += multiplicity;
    degree_[x] += multiplicity;
    degree_[y] += multiplicity;
}

std::size_t Multigraph::multiplicity(VertexId x, VertexId y) const
{
    if (y < x)
        std::swap(x, y);
    auto it = pairs_.find({x, y});
    return it == pairs_.end() ? 0 : it->second;
}

std::size_t Multigraph::max_degree() const noexcept
{
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

SimpleGraph::SimpleGraph(std::size_t vertex_count)
    : adjacency_(vertex_count),
      words_((vertex_count + word_bits - 1) / word_bits),
      rows_(vertex_count * words_, 0)
{
}

void SimpleGraph::add_edge(VertexId u, VertexId v)
{
    if (u == v)
        throw InputError("simple graph self-loop at vertex " + std::to_string(u));
    if (u >= vertex_count() || v >= vertex_count())
        throw InputError("simple graph vertex out of range");
    if (adjacent(u, v))
        return;
    rows_[u * words_ + v / word_bits] |= Word{1} << (v % word_bits);
    rows_[v * words_ + u / word_bits] |= Word{1} << (u % word_bits);
    auto& au = adjacency_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adjacency_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool SimpleGraph::adjacent(VertexId u, VertexId v) const
{
    if (u >= vertex_count() || v >= vertex_count())
        throw InputError("simple graph vertex out of range");
    return (rows_[u * words_ + v / word_bits] >> (v % word_bits)) & 1U;
}

std::size_t SimpleGraph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (const auto& a : adjacency_)
        best = std::max(best, a.size());
    return best;
}

std::vector<std::pair<VertexId, VertexId>> SimpleGraph::edges() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::induced(std::span<const VertexId> vertices) const
{
    std::vector<std::size_t> local(vertex_count(), vertex_count());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = i;
    SimpleGraph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (VertexId w : adjacency_[vertices[i]])
            if (local[w] != vertex_count() && i < local[w])
                g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(local[w]));
    return g;
}

std::vector<std::vector<VertexId>> SimpleGraph::components() const
{
    const std::size_t n = vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<VertexId> comp;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : adjacency_[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Multigraph two_section(const Hypergraph& h)
{
    Multigraph g(h.vertex_count());
    for (const auto& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                g.add_edge(e[i], e[j]);
    return g;
}

std::size_t max_degree_two_section(const Hypergraph& h)
{
    std::size_t best = 0;
    for (VertexId x = 0; x < h.vertex_count(); ++x) {
        std::size_t d = 0;
        for (EdgeIndex j : h.incident_edges(x))
            d += h.edges()[j].size() - 1;
        best = std::max(best, d);
    }
    return best;
}

SimpleGraph line_graph(const Hypergraph& h)
{
    SimpleGraph g(h.edge_count());
    for (VertexId x = 0; x < h.vertex_count(); ++x) {
        auto inc = h.incident_edges(x);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                g.add_edge(static_cast<VertexId>(inc[a]), static_cast<VertexId>(inc[b]));
    }
    return g;
}

} // namespace hyperq
