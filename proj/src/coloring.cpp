#include "hyperq/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hyperq/errors.hpp"
#include "hyperq/rng.hpp"

namespace hyperq {

OrderStrategy OrderStrategy::parse(std::string_view text, std::uint64_t default_seed)
{
    if (text == "index")
        return {OrderKind::index, 0};
    if (text == "desc-degree")
        return {OrderKind::desc_degree, 0};
    if (text == "random")
        return {OrderKind::random, default_seed};
    if (text.starts_with("random(") && text.ends_with(")")) {
        auto digits = text.substr(7, text.size() - 8);
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty())
            return {OrderKind::random, seed};
    }
    throw InputError("unknown order strategy '" + std::string(text)
                     + "' (expected index, desc-degree, random or random(<seed>))");
}

std::string OrderStrategy::to_string() const
{
    switch (kind) {
    case OrderKind::index:
        return "index";
    case OrderKind::desc_degree:
        return "desc-degree";
    case OrderKind::random:
        return "random(" + std::to_string(seed) + ")";
    }
    return "?";
}

bool is_proper(const Hypergraph& h, const EdgeColoring& c)
{
    if (c.colors.size() != h.edge_count())
        throw InputError("edge colouring has " + std::to_string(c.colors.size())
                         + " entries for " + std::to_string(h.edge_count()) + " hyperedges");
    for (Color col : c.colors)
        if (col == 0)
            throw InputError("edge colouring is partial (colour 0 present)");
    for (VertexId x = 0; x < h.vertex_count(); ++x) {
        auto inc = h.incident_edges(x);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                if (c.colors[inc[a]] == c.colors[inc[b]])
                    return false;
    }
    return true;
}

bool is_proper(const SimpleGraph& g, const VertexColoring& c)
{
    if (c.colors.size() != g.vertex_count())
        throw InputError("vertex colouring has " + std::to_string(c.colors.size())
                         + " entries for " + std::to_string(g.vertex_count()) + " vertices");
    for (Color col : c.colors)
        if (col == 0)
            throw InputError("vertex colouring is partial (colour 0 present)");
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v])
            return false;
    return true;
}

void compact_colors(std::vector<Color>& colors)
{
    std::vector<Color> relabel;
    Color next = 0;
    for (Color& col : colors) {
        if (col >= relabel.size())
            relabel.resize(col + 1, 0);
        if (relabel[col] == 0)
            relabel[col] = ++next;
        col = relabel[col];
    }
}

namespace {

Color max_color(const std::vector<Color>& colors)
{
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

} // namespace

std::vector<EdgeIndex> edge_order(const Hypergraph& h, const OrderStrategy& order)
{
    std::vector<EdgeIndex> seq(h.edge_count());
    std::iota(seq.begin(), seq.end(), EdgeIndex{0});
    switch (order.kind) {
    case OrderKind::index:
        break;
    case OrderKind::desc_degree: {
        const auto deg = hyperedge_degrees(h);
        std::stable_sort(seq.begin(), seq.end(),
                         [&](EdgeIndex a, EdgeIndex b) { return deg[a] > deg[b]; });
        break;
    }
    case OrderKind::random: {
        Rng rng(order.seed);
        rng.shuffle(seq);
        break;
    }
    }
    return seq;
}

EdgeColoring greedy_color(const Hypergraph& h, const OrderStrategy& order)
{
    EdgeColoring out;
    out.colors.assign(h.edge_count(), 0);
    std::vector<EdgeIndex> blocked; // blocked[c] == i + 1 when colour c is taken near edge i
    for (EdgeIndex i : edge_order(h, order)) {
        for (VertexId x : h.edges()[i]) {
            for (EdgeIndex j : h.incident_edges(x)) {
                const Color c = out.colors[j];
                if (c == 0)
                    continue;
                if (c >= blocked.size())
                    blocked.resize(c + 1, 0);
                blocked[c] = i + 1;
            }
        }
        Color c = 1;
        while (c < blocked.size() && blocked[c] == i + 1)
            ++c;
        out.colors[i] = c;
        out.q_used = std::max(out.q_used, c);
    }
    return out;
}

namespace {

constexpr Color uncoloured = 0;

// Smallest colour absent from the coloured neighbours of v.
Color first_free(const SimpleGraph& g, VertexId v, const std::vector<Color>& colors,
                 std::vector<std::size_t>& stamp, std::size_t& epoch)
{
    ++epoch;
    for (VertexId w : g.neighbors(v)) {
        const Color c = colors[w];
        if (c == uncoloured)
            continue;
        if (c >= stamp.size())
            stamp.resize(c + 1, 0);
        stamp[c] = epoch;
    }
    Color c = 1;
    while (c < stamp.size() && stamp[c] == epoch)
        ++c;
    return c;
}

// BFS order from root over vertices not in `skip`.
std::vector<VertexId> bfs_order(const SimpleGraph& g, VertexId root, const std::vector<bool>& skip)
{
    std::vector<bool> seen(skip);
    std::vector<VertexId> order{root};
    seen[root] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (VertexId w : g.neighbors(order[head])) {
            if (!seen[w]) {
                seen[w] = true;
                order.push_back(w);
            }
        }
    }
    return order;
}

// First-fit in reverse BFS order, root last. Every non-root vertex still
// has its uncoloured BFS parent when it is coloured.
void colour_reverse_bfs(const SimpleGraph& g, VertexId root, std::vector<Color>& colors,
                        const std::vector<bool>& skip)
{
    auto order = bfs_order(g, root, skip);
    std::vector<std::size_t> stamp;
    std::size_t epoch = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        colors[*it] = first_free(g, *it, colors, stamp, epoch);
}

bool connected_without(const SimpleGraph& g, const std::vector<bool>& skip)
{
    const std::size_t n = g.vertex_count();
    VertexId root = 0;
    std::size_t remaining = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (!skip[v]) {
            if (remaining == 0)
                root = v;
            ++remaining;
        }
    }
    if (remaining == 0)
        return true;
    return bfs_order(g, root, skip).size() == remaining;
}

// Any articulation point of a connected graph (iterative Tarjan), or n if none.
VertexId find_cut_vertex(const SimpleGraph& g)
{
    const std::size_t n = g.vertex_count();
    if (n < 3)
        return static_cast<VertexId>(n);
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> disc(n, unvisited), low(n, 0), next_child(n, 0);
    std::vector<VertexId> parent(n, static_cast<VertexId>(n));
    std::size_t timer = 0;
    std::size_t root_children = 0;
    std::vector<VertexId> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        auto nbrs = g.neighbors(v);
        if (next_child[v] < nbrs.size()) {
            const VertexId w = nbrs[next_child[v]++];
            if (disc[w] == unvisited) {
                parent[w] = v;
                disc[w] = low[w] = timer++;
                if (v == 0)
                    ++root_children;
                stack.push_back(w);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
            continue;
        }
        stack.pop_back();
        const VertexId p = parent[v];
        if (p == n)
            continue;
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p])
            return p;
    }
    return root_children > 1 ? 0 : static_cast<VertexId>(n);
}

std::vector<Color> colour_connected(const SimpleGraph& g);

// Regular graph with a cut vertex: split at it and glue the halves by
// permuting the second half's colours so the cut vertex agrees.
std::vector<Color> colour_across_cut(const SimpleGraph& g, VertexId cut)
{
    const std::size_t n = g.vertex_count();
    std::vector<bool> skip(n, false);
    skip[cut] = true;
    // One component of G - cut forms the first side.
    VertexId start = cut == 0 ? 1 : 0;
    auto side = bfs_order(g, start, skip);
    std::vector<bool> in_first(n, false);
    for (VertexId v : side)
        in_first[v] = true;

    std::vector<VertexId> first{cut}, second{cut};
    for (VertexId v = 0; v < n; ++v) {
        if (v == cut)
            continue;
        (in_first[v] ? first : second).push_back(v);
    }
    auto colour_side = [&](const std::vector<VertexId>& verts) {
        SimpleGraph sub = g.induced(verts);
        std::vector<Color> local(verts.size(), uncoloured);
        colour_reverse_bfs(sub, 0, local, std::vector<bool>(verts.size(), false));
        return local;
    };
    auto c1 = colour_side(first);
    auto c2 = colour_side(second);
    const Color want = c1[0];
    const Color have = c2[0];
    std::vector<Color> colors(n, uncoloured);
    for (std::size_t i = 0; i < first.size(); ++i)
        colors[first[i]] = c1[i];
    for (std::size_t i = 1; i < second.size(); ++i) {
        Color c = c2[i];
        if (c == have)
            c = want;
        else if (c == want)
            c = have;
        colors[second[i]] = c;
    }
    return colors;
}

// Regular, 2-connected, not complete, degree >= 3.
std::vector<Color> colour_two_connected_regular(const SimpleGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<bool> skip(n, false);
    for (VertexId v = 0; v < n; ++v) {
        auto nbrs = g.neighbors(v);
        for (std::size_t a = 0; a < nbrs.size(); ++a) {
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                const VertexId u = nbrs[a];
                const VertexId w = nbrs[b];
                if (g.adjacent(u, w))
                    continue;
                skip[u] = skip[w] = true;
                if (connected_without(g, skip)) {
                    std::vector<Color> colors(n, uncoloured);
                    colors[u] = colors[w] = 1;
                    colour_reverse_bfs(g, v, colors, skip);
                    return colors;
                }
                skip[u] = skip[w] = false;
            }
        }
    }
    throw std::logic_error("brooks: no admissible vertex triple in a 2-connected regular graph");
}

std::vector<Color> colour_cycle(const SimpleGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<Color> colors(n, uncoloured);
    VertexId prev = 0;
    VertexId cur = 0;
    for (std::size_t step = 0; step < n; ++step) {
        colors[cur] = step % 2 == 0 ? 1 : 2;
        auto nbrs = g.neighbors(cur);
        const VertexId nxt = nbrs[0] == prev && step > 0 ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = nxt;
    }
    if (n % 2 == 1)
        colors[prev] = 3;
    return colors;
}

std::vector<Color> colour_connected(const SimpleGraph& g)
{
    const std::size_t n = g.vertex_count();
    if (g.edge_count() == n * (n - 1) / 2) {
        std::vector<Color> colors(n);
        std::iota(colors.begin(), colors.end(), Color{1});
        return colors;
    }
    const std::size_t delta = g.max_degree();
    VertexId low = static_cast<VertexId>(n);
    for (VertexId v = 0; v < n && low == n; ++v)
        if (g.degree(v) < delta)
            low = v;
    if (low != n) {
        std::vector<Color> colors(n, uncoloured);
        colour_reverse_bfs(g, low, colors, std::vector<bool>(n, false));
        return colors;
    }
    if (delta == 2)
        return colour_cycle(g);
    const VertexId cut = find_cut_vertex(g);
    if (cut != n)
        return colour_across_cut(g, cut);
    return colour_two_connected_regular(g);
}

} // namespace

VertexColoring brooks_color(const SimpleGraph& g)
{
    VertexColoring out;
    out.colors.assign(g.vertex_count(), uncoloured);
    for (const auto& comp : g.components()) {
        auto local = colour_connected(g.induced(comp));
        compact_colors(local);
        for (std::size_t i = 0; i < comp.size(); ++i)
            out.colors[comp[i]] = local[i];
        out.q_used = std::max(out.q_used, max_color(local));
    }
    return out;
}

EdgeColoring brooks_edge_color(const Hypergraph& h)
{
    auto vc = brooks_color(line_graph(h));
    return {std::move(vc.colors), vc.q_used};
}

namespace {

constexpr std::size_t no_edge = std::numeric_limits<std::size_t>::max();

class MisraGries {
public:
    MisraGries(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges)
        : edges_(std::move(edges)), colour_(edges_.size(), uncoloured), adj_(n)
    {
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            adj_[edges_[e].first].push_back(e);
            adj_[edges_[e].second].push_back(e);
        }
        std::size_t delta = 0;
        for (const auto& a : adj_)
            delta = std::max(delta, a.size());
        palette_ = static_cast<Color>(delta + 1);
        at_.assign(n * (palette_ + 1), no_edge);
    }

    std::vector<Color> run()
    {
        for (std::size_t e = 0; e < edges_.size(); ++e)
            colour_edge(e);
        return colour_;
    }

private:
    std::size_t& at(VertexId v, Color c) { return at_[v * (palette_ + 1) + c]; }
    bool is_free(VertexId v, Color c) { return at(v, c) == no_edge; }

    VertexId other(std::size_t e, VertexId v) const
    {
        return edges_[e].first == v ? edges_[e].second : edges_[e].first;
    }

    Color free_colour(VertexId v)
    {
        for (Color c = 1; c <= palette_; ++c)
            if (is_free(v, c))
                return c;
        throw std::logic_error("misra-gries: no free colour");
    }

    void set(std::size_t e, Color c)
    {
        colour_[e] = c;
        at(edges_[e].first, c) = e;
        at(edges_[e].second, c) = e;
    }

    void clear(std::size_t e)
    {
        const Color c = colour_[e];
        if (c == uncoloured)
            return;
        at(edges_[e].first, c) = no_edge;
        at(edges_[e].second, c) = no_edge;
        colour_[e] = uncoloured;
    }

    void colour_edge(std::size_t e0)
    {
        const VertexId u = edges_[e0].first;
        // Fan of u: fan_edges[i] joins u to fan[i]; fan_edges[i+1]'s colour is free on fan[i].
        std::vector<VertexId> fan{edges_[e0].second};
        std::vector<std::size_t> fan_edges{e0};
        std::vector<bool> in_fan(adj_.size(), false);
        in_fan[fan[0]] = true;
        for (bool grown = true; grown;) {
            grown = false;
            const VertexId last = fan.back();
            for (Color c = 1; c <= palette_ && !grown; ++c) {
                if (!is_free(last, c))
                    continue;
                const std::size_t e = at(u, c);
                if (e == no_edge)
                    continue;
                const VertexId w = other(e, u);
                if (in_fan[w])
                    continue;
                fan.push_back(w);
                fan_edges.push_back(e);
                in_fan[w] = true;
                grown = true;
            }
        }

        const Color c = free_colour(u);
        const Color d = free_colour(fan.back());
        invert_path(u, c, d);

        std::size_t w = 0;
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0 && !is_free(fan[i - 1], colour_[fan_edges[i]]))
                break;
            if (is_free(fan[i], d)) {
                w = i;
                break;
            }
        }
        if (!is_free(fan[w], d))
            throw std::logic_error("misra-gries: no fan vertex with the free colour");

        std::vector<Color> shifted(w);
        for (std::size_t i = 0; i < w; ++i)
            shifted[i] = colour_[fan_edges[i + 1]];
        for (std::size_t i = 1; i <= w; ++i)
            clear(fan_edges[i]);
        for (std::size_t i = 0; i < w; ++i)
            set(fan_edges[i], shifted[i]);
        set(fan_edges[w], d);
    }

    // Swap c and d along the path leaving u on a d-edge.
    void invert_path(VertexId u, Color c, Color d)
    {
        if (c == d)
            return;
        std::vector<std::size_t> path;
        VertexId x = u;
        Color want = d;
        for (;;) {
            const std::size_t e = at(x, want);
            if (e == no_edge)
                break;
            path.push_back(e);
            x = other(e, x);
            want = want == d ? c : d;
        }
        std::vector<Color> flipped;
        flipped.reserve(path.size());
        for (std::size_t e : path)
            flipped.push_back(colour_[e] == d ? c : d);
        for (std::size_t e : path)
            clear(e);
        for (std::size_t i = 0; i < path.size(); ++i)
            set(path[i], flipped[i]);
    }

    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<Color> colour_;
    std::vector<std::vector<std::size_t>> adj_;
    Color palette_ = 1;
    std::vector<std::size_t> at_;
};

EdgeColoring finish(std::vector<Color> colors)
{
    EdgeColoring out;
    out.q_used = max_color(colors);
    out.colors = std::move(colors);
    return out;
}

} // namespace

EdgeColoring vizing_edge_color(const Hypergraph& h)
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(h.edge_count());
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        const auto& e = h.edges()[i];
        if (e.size() != 2)
            throw UnsupportedInput("vizing colouring needs a simple graph: hyperedge "
                                   + std::to_string(i) + " has size " + std::to_string(e.size()));
        edges.emplace_back(e[0], e[1]);
    }
    if (!is_linear(h))
        throw UnsupportedInput("vizing colouring needs a simple graph: repeated edge present");
    auto colors = MisraGries(h.vertex_count(), std::move(edges)).run();
    compact_colors(colors);
    return finish(std::move(colors));
}

EdgeColoring vizing_edge_color(const SimpleGraph& g)
{
    auto colors = MisraGries(g.vertex_count(), g.edges()).run();
    compact_colors(colors);
    return finish(std::move(colors));
}

} // namespace hyperq
