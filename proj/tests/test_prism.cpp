#include <rid/classical.hpp>
#include <rid/enumerate.hpp>
#include <rid/prism.hpp>

#include "oracles.hpp"

#include <doctest.h>

using namespace rid;

TEST_CASE("cube")
{
    auto r = prism_check(named::cycle(4), 2);
    CHECK(r.gamma.value == 2);
    CHECK(r.i_prism.value == 2);
    CHECK(r.equal);
    CHECK(r.lifted_witness_valid);
}

TEST_CASE("pentagonal prism")
{
    auto r = prism_check(named::cycle(5), 2);
    CHECK(r.gamma.value == 4);
    CHECK(r.i_prism.value == oracle::min_dominating(prism_product(named::cycle(5), 2), true));
    CHECK(r.equal);
}

TEST_CASE("one copy is the graph itself")
{
    for_each_labeled_graph(5, [](const Graph & g) {
        auto r = prism_check(g, 1);
        REQUIRE(r.gamma.value == oracle::min_dominating(g, true));
        REQUIRE(r.i_prism.value == r.gamma.value);
    });
}

TEST_CASE("rainbow labelings become prism sets")
{
    Labeling f{2, {1, 0, 2, 0}};
    CHECK(rainbow_to_prism_set(f, 4).bits == (bit(0) | bit(4 + 2)));
}

TEST_CASE("equality and witness transfer on small graphs")
{
    for (int n = 0; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            for_each_labeled_graph(n, [&](const Graph & g) {
                auto r = prism_check(g, k);
                REQUIRE(r.equal);
                REQUIRE(r.lifted_witness_valid);
                auto prism = prism_product(g, k);
                REQUIRE(oracle::dominates(prism, r.lifted_witness.members()));
                REQUIRE(oracle::independent(prism, r.lifted_witness.members()));
            });
}
