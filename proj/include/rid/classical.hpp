#pragma once

#include <rid/graph.hpp>
#include <rid/solver.hpp>

#include <cstdint>

namespace rid {

struct SetResult
{
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
};

auto is_independent(const Graph & g, VertexSet s) -> bool;
auto is_dominating(const Graph & g, VertexSet s) -> bool;

// Exhaustive over subsets by increasing size; the witness is the numerically
// smallest mask of minimum size. Both refuse graphs with 2^n over budget.
auto independent_domination(const Graph & g, const Budget & budget = {}) -> SetResult;
auto domination_number(const Graph & g, const Budget & budget = {}) -> SetResult;

}
