#include <rid/codec.hpp>
#include <rid/enumerate.hpp>
#include <rid/error.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace rid;

TEST_CASE("graph6 small cases")
{
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("A_") == named::complete(2));
    CHECK(parse_graph6("A?") == Graph(2));
    CHECK(parse_graph6("?") == Graph(0));
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(named::complete(2)) == "A_");
    CHECK(oracle::graph6(named::complete(2)) == "A_");
    CHECK(oracle::graph6(Graph(2)) == "A?");
}

TEST_CASE("graph6 agrees with the reference encoder and round-trips up to six vertices")
{
    for (int n = 0; n <= 6; ++n)
        for_each_labeled_graph(n, [](const Graph & g) {
            auto text = encode_graph6(g);
            REQUIRE(text == oracle::graph6(g));
            REQUIRE(parse_graph6(text) == g);
        });
}

TEST_CASE("graph6 handles large orders")
{
    std::mt19937_64 rng(7);
    auto g = oracle::random_graph(62, 0.3, rng);
    CHECK(encode_graph6(g) == oracle::graph6(g));
    CHECK(parse_graph6(encode_graph6(g)) == g);
    CHECK_THROWS_AS(encode_graph6(Graph(63)), UnsupportedSize);
}

TEST_CASE("graph6 header and line endings")
{
    CHECK(parse_graph6(">>graph6<<A_") == named::complete(2));
    CHECK(parse_graph6("A_\n") == named::complete(2));
    CHECK(parse_graph6("A_\r\n") == named::complete(2));
}

TEST_CASE("graph6 errors name the byte offset")
{
    auto offset_of = [](std::string_view text) -> std::size_t {
        try {
            parse_graph6(text);
        }
        catch (const ParseError & e) {
            return e.offset();
        }
        FAIL("no parse error for " << text);
        return 0;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of(" ") == 0);
    CHECK(offset_of("~") == 0);           // long form
    CHECK(offset_of("Dh") == 2);          // truncated
    CHECK(offset_of("A_x") == 2);         // trailing garbage
    CHECK(offset_of("D h") == 1);         // invalid data byte
    CHECK(offset_of("A`") == 1);          // padding bit set
    CHECK(offset_of(">>graph6<<A_x") == 12);
}

TEST_CASE("edge lists")
{
    std::istringstream in("4 3\n0 1\n1 2\n2 3\n");
    CHECK(parse_edge_list(in) == named::path(4));
    CHECK(encode_edge_list(named::path(3)) == "3 2\n0 1\n1 2\n");

    auto throws_input = [](const std::string & text) {
        std::istringstream s(text);
        CHECK_THROWS_AS(parse_edge_list(s), Error);
    };
    throws_input("3 2\n0 1\n");
    throws_input("3 1\n0 3\n");
    throws_input("3 1\n1 1\n");
    throws_input("3 2\n0 1\n1 0\n");
    throws_input("3 1\n0 x\n");
    throws_input("");
    throws_input("65 0\n");
}

TEST_CASE("read_graphs detects the format")
{
    SUBCASE("graph6 lines with a header and blank lines")
    {
        std::istringstream in(">>graph6<<A_\n\nDhc\n");
        auto records = read_graphs(in);
        REQUIRE(records.size() == 2);
        CHECK(records[0].had_header);
        CHECK(records[0].text == "A_");
        CHECK(records[1].line == 3);
        CHECK(records[1].graph == named::cycle(5));
    }
    SUBCASE("concatenated edge lists")
    {
        std::istringstream in("2 1\n0 1\n3 0\n");
        auto records = read_graphs(in);
        REQUIRE(records.size() == 2);
        CHECK(records[0].from_edge_list);
        CHECK(records[1].line == 3);
        CHECK(records[1].graph == Graph(3));
    }
    SUBCASE("errors name the line")
    {
        std::istringstream in("A_\nA_x\n");
        try {
            read_graphs(in);
            FAIL("expected an error");
        }
        catch (const InputError & e) {
            CHECK(std::string(e.what()).starts_with("line 2:"));
        }
    }
}
