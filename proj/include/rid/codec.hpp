#pragma once

#include <rid/graph.hpp>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace rid {

inline constexpr int max_graph6_order = 62;
inline constexpr std::string_view graph6_header = ">>graph6<<";

// Short-form graph6 only. A leading ">>graph6<<" header is skipped, as is a
// trailing '\r' or '\n'.
auto parse_graph6(std::string_view line) -> Graph;
auto encode_graph6(const Graph & g) -> std::string;

// "n m" followed by m lines "u v", 0-indexed.
auto parse_edge_list(std::istream & in) -> Graph;
auto encode_edge_list(const Graph & g) -> std::string;

struct InputRecord
{
    Graph graph;
    std::string text;  // original graph6 line, or the encoding of an edge-list graph
    std::size_t line;  // 1-based line where the record starts
    bool had_header = false;
    bool from_edge_list = false;
};

// Reads a whole stream of graphs. The format is detected from the first
// non-blank line: two integers means edge lists (possibly concatenated),
// anything else graph6 lines. Errors name the offending line.
auto read_graphs(std::istream & in) -> std::vector<InputRecord>;

}
