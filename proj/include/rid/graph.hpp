#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace rid {

inline constexpr int max_vertices = 64;

using Mask = std::uint64_t;

inline constexpr auto bit(int v) -> Mask { return Mask{1} << v; }

inline constexpr auto low_bits(int n) -> Mask { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline auto popcount(Mask m) -> int { return std::popcount(m); }

// Calls fn(v) for every set bit v of m, lowest first.
template <typename Fn_>
inline auto for_each_bit(Mask m, Fn_ && fn) -> void
{
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        fn(v);
    }
}

struct VertexSet
{
    Mask bits = 0;

    auto contains(int v) const -> bool { return (bits >> v) & 1; }
    auto size() const -> int { return popcount(bits); }
    auto empty() const -> bool { return bits == 0; }
    auto insert(int v) -> void { bits |= bit(v); }
    auto members() const -> std::vector<int>;

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;
};

// Undirected simple graph on vertices 0..n-1, one adjacency bit row per vertex.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n);

    static auto from_edges(int n, std::span<const std::pair<int, int>> edges) -> Graph;
    static auto from_edges(int n, std::initializer_list<std::pair<int, int>> edges) -> Graph;

    auto order() const -> int { return static_cast<int>(_adj.size()); }
    auto row(int v) const -> Mask { return _adj[v]; }
    auto rows() const -> std::span<const Mask> { return _adj; }
    auto all() const -> Mask { return low_bits(order()); }

    auto adjacent(int u, int v) const -> bool { return (_adj[u] >> v) & 1; }
    auto degree(int v) const -> int { return popcount(_adj[v]); }
    auto max_degree() const -> int;
    auto edge_count() const -> int;
    auto edges() const -> std::vector<std::pair<int, int>>;

    // Open neighbourhood of a set, excluding the set itself.
    auto neighbourhood(Mask s) const -> Mask;
    auto closed_neighbourhood(Mask s) const -> Mask;

    auto add_edge(int u, int v) -> void;
    auto remove_edge(int u, int v) -> void;

    auto is_connected() const -> bool;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    std::vector<Mask> _adj;
};

struct Component
{
    Graph subgraph;
    std::vector<int> vertex_map;
};

using ComponentDecomposition = std::vector<Component>;

auto complement(const Graph & g) -> Graph;

// Components ordered by their lowest original vertex.
auto components(const Graph & g) -> ComponentDecomposition;

auto component_masks(const Graph & g) -> std::vector<Mask>;

// Vertices of s in ascending order become 0..|s|-1; the map sends new index to original.
auto induced_subgraph(const Graph & g, VertexSet s) -> std::pair<Graph, std::vector<int>>;

// Generalized prism g □ K_k. Vertex (v, copy i) has index i * n + v, copies 0..k-1.
auto prism_product(const Graph & g, int k) -> Graph;

auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

// Relabels so that vertex v of g becomes perm[v].
auto permute(const Graph & g, std::span<const int> perm) -> Graph;

namespace named {
    auto empty(int n) -> Graph;
    auto complete(int n) -> Graph;
    auto path(int n) -> Graph;
    auto cycle(int n) -> Graph;
    // S_leaves: centre 0, leaves 1..leaves.
    auto star(int leaves) -> Graph;
    // S_leaves^+: star plus the edge 1-2.
    auto star_plus(int leaves) -> Graph;
    // S(a, b) with a >= b: centres 0 (a-star) and 1 (b-star) joined by the bridge.
    auto double_star(int a, int b) -> Graph;
}

}
