#pragma once

#include <rid/classical.hpp>
#include <rid/graph.hpp>
#include <rid/solver.hpp>

namespace rid {

struct PrismReport
{
    int k = 1;
    SolveResult gamma;   // gamma_rik(g)
    SetResult i_prism;   // i(g □ K_k)
    bool equal = false;
    // The rainbow witness carried into the prism: vertex v with label c > 0
    // becomes (v, copy c - 1).
    VertexSet lifted_witness;
    bool lifted_witness_valid = false;
};

// Vertex (v, copy i) of the prism has index i * n + v.
auto rainbow_to_prism_set(const Labeling & f, int n) -> VertexSet;

auto prism_check(const Graph & g, int k, const Budget & budget = {}) -> PrismReport;

}
