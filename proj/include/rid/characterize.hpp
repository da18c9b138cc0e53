#pragma once

#include <rid/graph.hpp>

#include <optional>
#include <string_view>

namespace rid {

// Connected graphs with gamma_ri2 = n - 1.
struct FamilyTag
{
    enum class Variant
    {
        star,           // S_{n-1}
        star_plus_edge, // S_{n-1}^+
        double_star_31, // S(n-3, 1), n >= 4
        c5,
        none
    };

    Variant variant = Variant::none;
    int centre = -1;        // star and star+: the (n-1)-vertex; double star: hub of the big side
    int bridge_other = -1;  // double star: the other end of the bridge

    friend auto operator==(const FamilyTag &, const FamilyTag &) -> bool = default;
};

// star | star+ | dstar31 | c5 | none
auto to_token(FamilyTag::Variant v) -> std::string_view;

struct GraphClass
{
    struct Special
    {
        int component;
        FamilyTag tag;
    };

    std::optional<Special> special;
    bool trivially_small = false;
    bool matches_n_minus_1 = false;
};

auto is_c5(const Graph & g) -> bool;

// Structural tests only: degree multiset and a constant number of adjacency
// probes. Throws InputError unless g is connected with n >= 3.
auto classify_connected(const Graph & g) -> FamilyTag;

// Every component is K1 or K2.
auto is_trivial_components(const Graph & g) -> bool;

// Requires n >= 3. matches_n_minus_1 holds when exactly one component carries
// a family tag and every other component is K1 or K2.
auto classify_graph(const Graph & g) -> GraphClass;

// n when all components are K1/K2, n - 1 when classify_graph matches, else nullopt.
auto predict_gamma_ri2(const Graph & g) -> std::optional<int>;

}
