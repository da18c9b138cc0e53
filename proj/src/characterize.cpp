#include <rid/characterize.hpp>
#include <rid/error.hpp>

namespace rid {

auto to_token(FamilyTag::Variant v) -> std::string_view
{
    switch (v) {
        case FamilyTag::Variant::star: return "star";
        case FamilyTag::Variant::star_plus_edge: return "star+";
        case FamilyTag::Variant::double_star_31: return "dstar31";
        case FamilyTag::Variant::c5: return "c5";
        case FamilyTag::Variant::none: return "none";
    }
    return "none";
}

auto is_c5(const Graph & g) -> bool
{
    if (g.order() != 5 || ! g.is_connected())
        return false;
    for (int v = 0; v < 5; ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

namespace {
    auto first_of_degree(const Graph & g, int d) -> int
    {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == d)
                return v;
        return -1;
    }

    auto count_of_degree(const Graph & g, int d) -> int
    {
        int c = 0;
        for (int v = 0; v < g.order(); ++v)
            c += g.degree(v) == d;
        return c;
    }
}

auto classify_connected(const Graph & g) -> FamilyTag
{
    using V = FamilyTag::Variant;
    int n = g.order();
    if (n < 3)
        throw InputError("family classification needs n >= 3, got " + std::to_string(n));
    if (! g.is_connected())
        throw InputError("family classification needs a connected graph");

    int m = g.edge_count();
    int universal = first_of_degree(g, n - 1);

    if (universal >= 0 && m == n - 1)
        return {V::star, universal, -1};
    if (universal >= 0 && m == n)
        return {V::star_plus_edge, universal, -1};

    if (n >= 4 && m == n - 1 && count_of_degree(g, 1) == n - 2) {
        // Remaining two vertices have degrees n-2 and 2 (both 2 when n = 4).
        int hub = first_of_degree(g, n - 2);
        if (hub >= 0) {
            Mask twos = 0;
            for_each_bit(g.row(hub), [&](int w) {
                if (g.degree(w) == 2)
                    twos |= bit(w);
            });
            if (twos)
                return {V::double_star_31, hub, std::countr_zero(twos)};
        }
    }

    if (is_c5(g))
        return {V::c5, -1, -1};
    return {};
}

auto is_trivial_components(const Graph & g) -> bool
{
    for (auto m : component_masks(g))
        if (popcount(m) > 2)
            return false;
    return true;
}

auto classify_graph(const Graph & g) -> GraphClass
{
    if (g.order() < 3)
        throw InputError("graph classification needs n >= 3, got " + std::to_string(g.order()));

    GraphClass result;
    int large = 0, tagged = 0;
    auto parts = components(g);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].subgraph.order() <= 2)
            continue;
        ++large;
        auto tag = classify_connected(parts[i].subgraph);
        if (tag.variant != FamilyTag::Variant::none) {
            ++tagged;
            if (tag.centre >= 0)
                tag.centre = parts[i].vertex_map[tag.centre];
            if (tag.bridge_other >= 0)
                tag.bridge_other = parts[i].vertex_map[tag.bridge_other];
            if (! result.special)
                result.special = GraphClass::Special{static_cast<int>(i), tag};
        }
    }
    result.trivially_small = large == 0;
    result.matches_n_minus_1 = large == 1 && tagged == 1;
    return result;
}

auto predict_gamma_ri2(const Graph & g) -> std::optional<int>
{
    if (is_trivial_components(g))
        return g.order();
    if (g.order() >= 3 && classify_graph(g).matches_n_minus_1)
        return g.order() - 1;
    return std::nullopt;
}

}
