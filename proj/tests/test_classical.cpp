#include <rid/classical.hpp>
#include <rid/enumerate.hpp>
#include <rid/error.hpp>
#include <rid/solver.hpp>

#include "oracles.hpp"

#include <doctest.h>

using namespace rid;

TEST_CASE("independent domination values")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(independent_domination(named::complete(n)).value == 1);
    auto star = independent_domination(named::star(5));
    CHECK(star.value == 1);
    CHECK(star.witness.bits == bit(0));
    CHECK(independent_domination(named::cycle(5)).value == 2);
    CHECK(independent_domination(Graph(0)).value == 0);
    CHECK(independent_domination(Graph(4)).value == 4);
}

TEST_CASE("domination values")
{
    CHECK(domination_number(named::complete(2)).value == 1);
    CHECK(domination_number(named::cycle(5)).value == 2);
    CHECK(domination_number(named::path(4)).value == 2);
    CHECK(domination_number(Graph(0)).value == 0);
}

TEST_CASE("set predicates")
{
    auto c5 = named::cycle(5);
    CHECK(is_dominating(c5, VertexSet{bit(0) | bit(2)}));
    CHECK_FALSE(is_dominating(c5, VertexSet{bit(0) | bit(1)}));
    CHECK(is_independent(c5, VertexSet{bit(0) | bit(2)}));
    CHECK_FALSE(is_independent(c5, VertexSet{bit(0) | bit(1)}));
}

TEST_CASE("both numbers match the subset oracle with valid witnesses")
{
    for (int n = 0; n <= 6; ++n)
        for_each_labeled_graph(n, [](const Graph & g) {
            auto i = independent_domination(g);
            auto d = domination_number(g);
            REQUIRE(i.value == oracle::min_dominating(g, true));
            REQUIRE(d.value == oracle::min_dominating(g, false));
            REQUIRE(i.witness.size() == i.value);
            REQUIRE(d.witness.size() == d.value);
            REQUIRE(oracle::dominates(g, i.witness.members()));
            REQUIRE(oracle::independent(g, i.witness.members()));
            REQUIRE(oracle::dominates(g, d.witness.members()));
            REQUIRE(d.value <= i.value);
        });
}

TEST_CASE("one colour rainbow independent domination is independent domination")
{
    for (int n = 0; n <= 6; ++n)
        for_each_labeled_graph(n, [](const Graph & g) { REQUIRE(gamma_brute(g, 1).value == independent_domination(g).value); });
}

TEST_CASE("budget")
{
    CHECK_THROWS_AS(independent_domination(Graph(25)), BudgetExceeded);
    Budget small;
    small.max_subsets = 16;
    CHECK_THROWS_AS(domination_number(Graph(5), small), BudgetExceeded);
    CHECK_NOTHROW(domination_number(Graph(4), small));
}
