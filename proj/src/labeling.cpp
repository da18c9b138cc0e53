#include <rid/labeling.hpp>
#include <rid/error.hpp>

#include <algorithm>

namespace rid {

auto Labeling::class_mask(int value) const -> Mask
{
    Mask m = 0;
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] == value)
            m |= bit(static_cast<int>(v));
    return m;
}

auto PartialLabeling::unassigned(int n, int k) -> PartialLabeling
{
    return PartialLabeling{k, std::vector<std::optional<int>>(n)};
}

auto PartialLabeling::assigned_mask() const -> Mask
{
    Mask m = 0;
    for (std::size_t v = 0; v < assigned.size(); ++v)
        if (assigned[v])
            m |= bit(static_cast<int>(v));
    return m;
}

auto PartialLabeling::zero_count() const -> int
{
    return static_cast<int>(std::count(assigned.begin(), assigned.end(), std::optional<int>{0}));
}

auto to_string(const Violation & v) -> std::string
{
    switch (v.kind) {
        case Violation::Kind::colour_class_not_independent:
            return "vertices " + std::to_string(v.vertex) + " and " + std::to_string(v.other) + " are adjacent and both labeled " + std::to_string(v.colour);
        case Violation::Kind::zero_vertex_misses_colour:
            return "vertex " + std::to_string(v.vertex) + " is labeled 0 but has no neighbour labeled " + std::to_string(v.colour);
    }
    return "unknown violation";
}

auto validate(const Graph & g, const Labeling & f) -> std::vector<Violation>
{
    int n = g.order();
    if (f.k < 1)
        throw InputError("labeling needs k >= 1");
    if (static_cast<int>(f.labels.size()) != n)
        throw InputError("labeling has " + std::to_string(f.labels.size()) + " labels for a graph of order " + std::to_string(n));
    for (int v = 0; v < n; ++v)
        if (f.labels[v] < 0 || f.labels[v] > f.k)
            throw InputError("label " + std::to_string(f.labels[v]) + " of vertex " + std::to_string(v) + " outside [0, " + std::to_string(f.k) + "]");

    std::vector<Mask> classes(f.k + 1, 0);
    for (int v = 0; v < n; ++v)
        classes[f.labels[v]] |= bit(v);

    std::vector<Violation> result;
    for (int u = 0; u < n; ++u) {
        int c = f.labels[u];
        if (c == 0) {
            for (int i = 1; i <= f.k; ++i)
                if (! (g.row(u) & classes[i]))
                    result.push_back({Violation::Kind::zero_vertex_misses_colour, u, -1, i});
        }
        else
            for_each_bit(g.row(u) & classes[c] & ~low_bits(u + 1), [&](int v) {
                result.push_back({Violation::Kind::colour_class_not_independent, u, v, c});
            });
    }
    return result;
}

auto is_valid(const Graph & g, const Labeling & f) -> bool
{
    return validate(g, f).empty();
}

auto weight(const Labeling & f) -> int
{
    return static_cast<int>(std::count_if(f.labels.begin(), f.labels.end(), [](int x) { return x != 0; }));
}

auto format_labels(const Labeling & f) -> std::string
{
    std::string result;
    for (std::size_t v = 0; v < f.labels.size(); ++v) {
        if (v)
            result.push_back(' ');
        result += std::to_string(f.labels[v]);
    }
    return result;
}

}
