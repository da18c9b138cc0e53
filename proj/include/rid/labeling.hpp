#pragma once

#include <rid/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rid {

// A candidate k-rainbow independent dominating function: one value in [0, k]
// per vertex.
struct Labeling
{
    int k = 1;
    std::vector<int> labels;

    // Vertices carrying label value, as a mask.
    auto class_mask(int value) const -> Mask;

    friend auto operator==(const Labeling &, const Labeling &) -> bool = default;
};

struct PartialLabeling
{
    int k = 1;
    std::vector<std::optional<int>> assigned;

    static auto unassigned(int n, int k) -> PartialLabeling;

    auto assigned_mask() const -> Mask;
    auto zero_count() const -> int;
};

struct Violation
{
    enum class Kind
    {
        colour_class_not_independent,
        zero_vertex_misses_colour
    };

    Kind kind;
    int vertex;
    int other;  // the adjacent same-coloured vertex, or -1
    int colour;

    friend auto operator==(const Violation &, const Violation &) -> bool = default;
};

auto to_string(const Violation & v) -> std::string;

// Only the nonzero classes need to be independent; the zero class may contain
// edges. Throws InputError on a length mismatch or out-of-range label.
auto validate(const Graph & g, const Labeling & f) -> std::vector<Violation>;
auto is_valid(const Graph & g, const Labeling & f) -> bool;

auto weight(const Labeling & f) -> int;

// Space-separated label sequence.
auto format_labels(const Labeling & f) -> std::string;

}
