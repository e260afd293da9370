#include "hyperq/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hyperq/errors.hpp"
#include "hyperq/transforms.hpp"

namespace hyperq {

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<Hyperedge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incidence_(vertex_count)
{
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        if (e.empty())
            throw InputError("hyperedge " + std::to_string(i) + " is empty");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InputError("hyperedge " + std::to_string(i) + " repeats a vertex");
        if (e.back() >= vertex_count_)
            throw InputError("hyperedge " + std::to_string(i) + " has vertex id "
                             + std::to_string(e.back()) + " >= n = "
                             + std::to_string(vertex_count_));
        for (VertexId x : e)
            incidence_[x].push_back(i);
    }
}

const Hyperedge& Hypergraph::edge(EdgeIndex i) const
{
    if (i >= edges_.size())
        throw InputError("hyperedge index " + std::to_string(i) + " out of range");
    return edges_[i];
}

std::span<const EdgeIndex> Hypergraph::incident_edges(VertexId x) const
{
    if (x >= vertex_count_)
        throw InputError("vertex id " + std::to_string(x) + " out of range");
    return incidence_[x];
}

std::size_t intersection_size(const Hyperedge& a, const Hyperedge& b)
{
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

bool intersects(const Hyperedge& a, const Hyperedge& b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

std::size_t vertex_degree(const Hypergraph& h, VertexId x)
{
    return h.incident_edges(x).size();
}

namespace {

// Marks every position meeting edge i (other than i) using a scratch stamp array.
std::size_t count_neighbours(const Hypergraph& h, EdgeIndex i, std::vector<EdgeIndex>& stamp)
{
    std::size_t count = 0;
    const EdgeIndex mark = i + 1;
    for (VertexId x : h.edges()[i]) {
        for (EdgeIndex j : h.incident_edges(x)) {
            if (j != i && stamp[j] != mark) {
                stamp[j] = mark;
                ++count;
            }
        }
    }
    return count;
}

} // namespace

std::size_t hyperedge_degree(const Hypergraph& h, EdgeIndex i)
{
    h.edge(i);
    std::vector<EdgeIndex> stamp(h.edge_count(), 0);
    return count_neighbours(h, i, stamp);
}

std::vector<std::size_t> hyperedge_degrees(const Hypergraph& h)
{
    std::vector<EdgeIndex> stamp(h.edge_count(), 0);
    std::vector<std::size_t> out(h.edge_count());
    for (EdgeIndex i = 0; i < h.edge_count(); ++i)
        out[i] = count_neighbours(h, i, stamp);
    return out;
}

bool is_linear(const Hypergraph& h)
{
    // Two positions share >= 2 vertices iff some position is reached twice
    // from the vertices of a single edge.
    std::vector<EdgeIndex> seen(h.edge_count(), 0);
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        const EdgeIndex mark = i + 1;
        for (VertexId x : h.edges()[i]) {
            for (EdgeIndex j : h.incident_edges(x)) {
                if (j == i)
                    continue;
                if (seen[j] == mark)
                    return false;
                seen[j] = mark;
            }
        }
    }
    return true;
}

bool is_loopless(const Hypergraph& h)
{
    return std::none_of(h.edges().begin(), h.edges().end(),
                        [](const Hyperedge& e) { return e.size() == 1; });
}

std::vector<Component> connected_components(const Hypergraph& h)
{
    const std::size_t n = h.vertex_count();
    std::vector<std::size_t> label(n, n);
    std::vector<Component> out;
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < n; ++root) {
        if (label[root] != n)
            continue;
        const std::size_t id = out.size();
        Component comp;
        label[root] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            comp.vertices.push_back(x);
            for (EdgeIndex j : h.incident_edges(x)) {
                for (VertexId y : h.edges()[j]) {
                    if (label[y] == n) {
                        label[y] = id;
                        stack.push_back(y);
                    }
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        out.push_back(std::move(comp));
    }
    for (EdgeIndex j = 0; j < h.edge_count(); ++j)
        out[label[h.edges()[j].front()]].edges.push_back(j);
    return out;
}

Hypergraph remove_hyperedge(const Hypergraph& h, EdgeIndex i)
{
    h.edge(i);
    std::vector<Hyperedge> edges;
    edges.reserve(h.edge_count() - 1);
    for (EdgeIndex j = 0; j < h.edge_count(); ++j)
        if (j != i)
            edges.push_back(h.edges()[j]);
    return Hypergraph(h.vertex_count(), std::move(edges));
}

Hypergraph partial_hypergraph(const Hypergraph& h, std::span<const EdgeIndex> keep)
{
    std::vector<Hyperedge> edges;
    edges.reserve(keep.size());
    for (EdgeIndex j : keep)
        edges.push_back(h.edge(j));
    return Hypergraph(h.vertex_count(), std::move(edges));
}

HypergraphStats stats(const Hypergraph& h)
{
    HypergraphStats s;
    s.n = h.vertex_count();
    s.m = h.edge_count();
    if (s.m > 0) {
        auto [lo, hi] = std::minmax_element(
            h.edges().begin(), h.edges().end(),
            [](const Hyperedge& a, const Hyperedge& b) { return a.size() < b.size(); });
        s.antirank = lo->size();
        s.rank = hi->size();
        if (*s.antirank == *s.rank)
            s.uniform_k = *s.rank;
    }
    if (s.n > 0) {
        s.max_degree = 0;
        s.min_degree = h.edge_count();
        for (VertexId x = 0; x < s.n; ++x) {
            const std::size_t d = vertex_degree(h, x);
            s.max_degree = std::max(s.max_degree, d);
            s.min_degree = std::min(s.min_degree, d);
        }
    }
    if (s.min_degree == s.max_degree)
        s.regular_d = s.max_degree;
    s.loopless = is_loopless(h);
    s.linear = is_linear(h);
    s.connected = connected_components(h).size() <= 1;
    s.delta2 = max_degree_two_section(h);
    return s;
}

} // namespace hyperq
