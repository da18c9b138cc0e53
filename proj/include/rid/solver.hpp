#pragma once

#include <rid/graph.hpp>
#include <rid/labeling.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace rid {

// Exhaustive procedures refuse work beyond these sizes instead of approximating.
struct Budget
{
    // (k+1)^n labelings for brute force; the default admits n <= 12 at k = 2.
    std::uint64_t max_labelings = std::uint64_t{1} << 20;
    // 2^n vertex subsets for the classical set problems; admits n <= 24.
    std::uint64_t max_subsets = std::uint64_t{1} << 24;
};

enum class Method
{
    brute,
    bnb
};

auto to_string(Method m) -> std::string_view;

struct SolveResult
{
    int value = 0;
    Labeling witness;
    std::uint64_t nodes_explored = 0;
    Method method = Method::brute;
};

// (base)^exponent, saturating at UINT64_MAX.
auto saturating_power(std::uint64_t base, int exponent) -> std::uint64_t;

// Minimum over all (k+1)^n labelings; the witness is the lexicographically
// smallest optimal labeling (vertex 0 first, labels ordered 0 < 1 < ... < k).
auto gamma_brute(const Graph & g, int k, const Budget & budget = {}) -> SolveResult;

// Branch and bound per connected component, summed. Vertices are branched in
// descending degree with label 0 tried first; a partial labeling is cut when
// its nonzero count reaches the incumbent or some 0-vertex can no longer see
// every colour. The witness matches gamma_brute's tie-breaking.
auto gamma_bnb(const Graph & g, int k) -> SolveResult;

// Processes order one vertex at a time, giving each the smallest colour whose
// class has no neighbour of it, or 0 if every class does. The partial labeling
// must restrict to a valid kRiDF of the subgraph induced by its assigned
// vertices, and order must list exactly the unassigned vertices.
auto extend_greedy(const Graph & g, const PartialLabeling & p, std::span<const int> order) -> Labeling;

// Minimum-weight valid labeling agreeing with every fixed label, by brute
// force over the free vertices; nullopt if none exists.
auto solve_constrained(const Graph & g, int k, const PartialLabeling & fixed, const Budget & budget = {}) -> std::optional<SolveResult>;

}
