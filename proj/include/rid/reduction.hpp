#pragma once

#include <rid/classical.hpp>
#include <rid/graph.hpp>
#include <rid/labeling.hpp>
#include <rid/solver.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rid {

struct Bipartition
{
    VertexSet x;
    VertexSet y;

    friend auto operator==(const Bipartition &, const Bipartition &) -> bool = default;
};

// Breadth-first 2-colouring; the lowest vertex of each component goes to x.
auto bipartition(const Graph & g) -> std::optional<Bipartition>;

// Domination on a bipartite source becomes kRiDF on a target where every
// source vertex is the centre of its own pendant star S_{k-1}. Target indices:
// source vertex v keeps index v; its leaves are N + v(k-1) .. N + v(k-1) + k-2.
struct ReductionInstance
{
    Graph source;
    Bipartition parts;
    int k = 2;
    Graph target;
    std::vector<int> core_map;
    std::vector<std::vector<int>> leaf_map;

    auto leaf_weight() const -> int { return (k - 1) * source.order(); }
};

auto build_reduction(const Graph & g, const Bipartition & parts, int k) -> ReductionInstance;

struct ReductionCheck
{
    int gamma_dom = 0;        // gamma(source)
    int gamma_rik_target = 0; // gamma_rik(target)
    int expected = 0;         // (k-1)(m+n) + gamma(source)
    bool equal = false;
    VertexSet dominating_witness;
    Labeling target_witness;
};

auto verify_reduction(const ReductionInstance & inst, const Budget & budget = {}) -> ReductionCheck;

// D ∩ X gets colour 1 and D ∩ Y colour 2. The leaves of a vertex in D_i, or of
// a 0-vertex adjacent to D_i, take the colours [1, k] minus i in ascending
// order; a 0-vertex adjacent to both sides follows D_1.
auto lift_dominating_set(const ReductionInstance & inst, VertexSet d) -> Labeling;

// The source vertices that f labels nonzero. Throws InputError if f is not a
// valid kRiDF of the target.
auto project_ridf(const ReductionInstance & inst, const Labeling & f) -> VertexSet;

// Line-oriented text:
//   source <graph6>
//   x <hex mask>
//   y <hex mask>
//   k <k>
//   target <graph6>
//   core <i0> <i1> ...
//   leaves <a,b,...> <c,d,...> ...   (one comma-separated group per source vertex)
auto format_instance(const ReductionInstance & inst) -> std::string;
auto parse_instance(std::string_view text) -> ReductionInstance;

}
