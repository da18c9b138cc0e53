#include <rid/graph.hpp>
#include <rid/error.hpp>

#include <algorithm>
#include <string>

namespace rid {

auto VertexSet::members() const -> std::vector<int>
{
    std::vector<int> result;
    for_each_bit(bits, [&](int v) { result.push_back(v); });
    return result;
}

Graph::Graph(int n)
{
    if (n < 0 || n > max_vertices)
        throw UnsupportedSize("graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
    _adj.assign(n, 0);
}

auto Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

auto Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) -> Graph
{
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

auto Graph::max_degree() const -> int
{
    int result = 0;
    for (auto r : _adj)
        result = std::max(result, popcount(r));
    return result;
}

auto Graph::edge_count() const -> int
{
    int twice = 0;
    for (auto r : _adj)
        twice += popcount(r);
    return twice / 2;
}

auto Graph::edges() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < order(); ++u)
        for_each_bit(_adj[u] & ~low_bits(u + 1), [&](int v) { result.emplace_back(u, v); });
    return result;
}

auto Graph::neighbourhood(Mask s) const -> Mask
{
    Mask result = 0;
    for_each_bit(s, [&](int v) { result |= _adj[v]; });
    return result & ~s;
}

auto Graph::closed_neighbourhood(Mask s) const -> Mask
{
    return neighbourhood(s) | s;
}

auto Graph::add_edge(int u, int v) -> void
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for order " + std::to_string(order()));
    if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u));
    _adj[u] |= bit(v);
    _adj[v] |= bit(u);
}

auto Graph::remove_edge(int u, int v) -> void
{
    _adj[u] &= ~bit(v);
    _adj[v] &= ~bit(u);
}

auto Graph::is_connected() const -> bool
{
    if (order() <= 1)
        return true;
    Mask seen = bit(0), frontier = bit(0);
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= _adj[v]; });
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all();
}

auto complement(const Graph & g) -> Graph
{
    int n = g.order();
    Graph result(n);
    for (int u = 0; u < n; ++u)
        for_each_bit(~g.row(u) & g.all() & ~low_bits(u + 1), [&](int v) { result.add_edge(u, v); });
    return result;
}

auto component_masks(const Graph & g) -> std::vector<Mask>
{
    std::vector<Mask> result;
    Mask unseen = g.all();
    while (unseen) {
        Mask seen = unseen & -unseen, frontier = seen;
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.row(v); });
            frontier = next & ~seen;
            seen |= next;
        }
        result.push_back(seen);
        unseen &= ~seen;
    }
    return result;
}

auto components(const Graph & g) -> ComponentDecomposition
{
    ComponentDecomposition result;
    for (auto m : component_masks(g)) {
        auto [sub, map] = induced_subgraph(g, VertexSet{m});
        result.push_back(Component{std::move(sub), std::move(map)});
    }
    return result;
}

auto induced_subgraph(const Graph & g, VertexSet s) -> std::pair<Graph, std::vector<int>>
{
    if (s.bits & ~g.all())
        throw InputError("vertex set exceeds graph order");
    auto map = s.members();
    Graph sub(static_cast<int>(map.size()));
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = i + 1; j < map.size(); ++j)
            if (g.adjacent(map[i], map[j]))
                sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(sub), std::move(map)};
}

auto prism_product(const Graph & g, int k) -> Graph
{
    int n = g.order();
    if (k < 1)
        throw InputError("prism factor must be positive");
    if (n * k > max_vertices)
        throw UnsupportedSize("prism of order " + std::to_string(n) + " x " + std::to_string(k) + " exceeds " + std::to_string(max_vertices) + " vertices");
    Graph result(n * k);
    for (int i = 0; i < k; ++i)
        for (auto [u, v] : g.edges())
            result.add_edge(i * n + u, i * n + v);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                result.add_edge(i * n + v, j * n + v);
    return result;
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    int offset = a.order();
    Graph result(a.order() + b.order());
    for (auto [u, v] : a.edges())
        result.add_edge(u, v);
    for (auto [u, v] : b.edges())
        result.add_edge(offset + u, offset + v);
    return result;
}

auto permute(const Graph & g, std::span<const int> perm) -> Graph
{
    if (static_cast<int>(perm.size()) != g.order())
        throw InputError("permutation length does not match graph order");
    Graph result(g.order());
    for (auto [u, v] : g.edges())
        result.add_edge(perm[u], perm[v]);
    return result;
}

namespace named {
    auto empty(int n) -> Graph { return Graph(n); }

    auto complete(int n) -> Graph
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto path(int n) -> Graph
    {
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v)
            g.add_edge(v, v + 1);
        return g;
    }

    auto cycle(int n) -> Graph
    {
        if (n < 3)
            throw InputError("cycle needs at least 3 vertices");
        Graph g = path(n);
        g.add_edge(n - 1, 0);
        return g;
    }

    auto star(int leaves) -> Graph
    {
        Graph g(leaves + 1);
        for (int v = 1; v <= leaves; ++v)
            g.add_edge(0, v);
        return g;
    }

    auto star_plus(int leaves) -> Graph
    {
        if (leaves < 2)
            throw InputError("star plus an edge needs at least 2 leaves");
        Graph g = star(leaves);
        g.add_edge(1, 2);
        return g;
    }

    auto double_star(int a, int b) -> Graph
    {
        if (a < b || b < 0)
            throw InputError("double star S(a, b) needs a >= b >= 0");
        Graph g(a + b + 2);
        g.add_edge(0, 1);
        for (int i = 0; i < a; ++i)
            g.add_edge(0, 2 + i);
        for (int j = 0; j < b; ++j)
            g.add_edge(1, 2 + a + j);
        return g;
    }
}

}
