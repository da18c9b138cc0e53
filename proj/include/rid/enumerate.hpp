#pragma once

#include <rid/graph.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rid {

inline constexpr int max_labeled_enumeration = 7;
inline constexpr int max_canonical_order = 8;

// Number of vertex pairs, i.e. edge-mask bits, for order n.
inline constexpr auto pair_count(int n) -> int { return n * (n - 1) / 2; }

// The labeled graph whose edge set is given by mask, bit b standing for the
// b-th pair in graph6 column order (0,1), (0,2), (1,2), (0,3), ...
auto labeled_graph(int n, std::uint64_t mask) -> Graph;

auto labeled_graph_count(int n) -> std::uint64_t;

// All 2^(n(n-1)/2) labeled graphs on n vertices, in edge-mask counter order.
auto for_each_labeled_graph(int n, const std::function<void(const Graph &)> & fn) -> void;
auto enumerate_labeled_graphs(int n) -> std::vector<Graph>;

// The graph6 string of the relabeling whose upper-triangle bit string (graph6
// column order) is lexicographically smallest over all vertex permutations.
// Equal iff the graphs are isomorphic.
auto canonical_form(const Graph & g) -> std::string;

// One representative per isomorphism class, in canonical form, sorted by
// canonical string. Built by adding a vertex with every neighbourhood to each
// class of order n - 1.
auto enumerate_nonisomorphic(int n) -> std::vector<Graph>;
auto enumerate_nonisomorphic_connected(int n) -> std::vector<Graph>;

}
