#include <rid/codec.hpp>
#include <rid/enumerate.hpp>
#include <rid/error.hpp>
#include <rid/nordhaus_gaddum.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace rid;

TEST_CASE("record examples")
{
    auto c5 = ng_record(named::cycle(5));
    CHECK(c5.gamma == 4);
    CHECK(c5.gamma_comp == 4);
    CHECK(c5.sum == 8);
    CHECK(c5.status == NGStatus::exceptional_c5);

    auto k3 = ng_record(named::complete(3));
    CHECK(k3.gamma == 2);
    CHECK(k3.gamma_comp == 3);
    CHECK(k3.status == NGStatus::at_upper);

    auto s3 = ng_record(named::star(3));
    CHECK(s3.gamma == 3);
    CHECK(s3.gamma_comp == 3);
    CHECK(s3.sum == 6);
    CHECK(s3.status == NGStatus::at_upper);

    CHECK(ng_record(Graph(1)).status == NGStatus::in_range);
    CHECK(ng_record(Graph(1)).sum == 2);
}

TEST_CASE("status rules")
{
    CHECK(ng_status(1, 9, false) == NGStatus::in_range);
    CHECK(ng_status(2, 4, false) == NGStatus::at_upper);
    CHECK(ng_status(2, 3, false) == NGStatus::in_range);
    CHECK(ng_status(2, 5, false) == NGStatus::violation);
    CHECK(ng_status(3, 4, false) == NGStatus::below_range);
    CHECK(ng_status(5, 8, true) == NGStatus::exceptional_c5);
    CHECK(ng_status(5, 7, true) == NGStatus::violation);
    CHECK(ng_status(5, 8, false) == NGStatus::violation);
    CHECK(breaks_bounds(NGStatus::below_range));
    CHECK_FALSE(breaks_bounds(NGStatus::at_upper));
    for (auto s : all_ng_statuses)
        CHECK(parse_ng_status(to_string(s)) == s);
}

TEST_CASE("streams")
{
    auto four = enumerate_labeled_graphs(4);
    auto r4 = verify_stream(four);
    CHECK(r4.total == 64);
    CHECK(r4.ok());

    auto five = enumerate_labeled_graphs(5);
    auto r5 = verify_stream(five);
    CHECK(r5.total == 1024);
    CHECK(r5.violations.empty());
    CHECK(r5.count(NGStatus::exceptional_c5) == 12);
    for (auto & id : r5.extremal)
        CHECK(ng_record(parse_graph6(id)).status == NGStatus::at_upper);

    auto none = verify_stream({});
    CHECK(none.total == 0);
    CHECK(none.extremal.empty());
    CHECK(none.ok());

    StreamOptions skip;
    skip.min_n = 5;
    CHECK(verify_stream(four, skip).total == 0);
}

TEST_CASE("the bound holds on every labeled graph up to six vertices")
{
    for (int n = 0; n <= 6; ++n) {
        auto graphs = enumerate_labeled_graphs(n);
        auto report = verify_stream(graphs);
        CHECK(report.ok());
    }
}

TEST_CASE("worker count does not change the report or record order")
{
    auto graphs = enumerate_labeled_graphs(5);
    auto run = [&](int workers, std::size_t chunk) {
        StreamOptions options;
        options.workers = workers;
        options.chunk = chunk;
        std::vector<NGRecord> records;
        auto report = verify_stream(graphs, options, [&](const NGRecord & r) { records.push_back(r); });
        return std::pair{summary_json(report) + report.extremal.front(), records};
    };
    auto base = run(1, 4096);
    CHECK(run(4, 4096) == base);
    CHECK(run(3, 7) == base);
    StreamOptions bad;
    bad.workers = 0;
    CHECK_THROWS_AS(verify_stream(graphs, bad), InputError);
}

TEST_CASE("failures report the lowest stream index")
{
    StreamOptions options;
    options.workers = 3;
    options.chunk = 5;
    try {
        verify_indexed(20, [](std::size_t i) -> Graph {
            if (i == 7 || i == 13)
                throw InputError("bad " + std::to_string(i));
            return Graph(2);
        }, options);
        FAIL("expected an error");
    }
    catch (const StreamItemError & e) {
        CHECK(e.index() == 7);
        CHECK(std::string(e.what()) == "bad 7");
    }
}

TEST_CASE("sum is symmetric under complement")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(1 + static_cast<int>(rng() % 9), 0.5, rng);
        REQUIRE(ng_record(g).sum == ng_record(complement(g)).sum);
    }
}

TEST_CASE("extremal harvest")
{
    auto connected = enumerate_nonisomorphic_connected(4);
    auto found = collect_extremal(connected, true);
    auto has = [&](const Graph & g) {
        for (auto & id : found)
            if (canonical_form(parse_graph6(id)) == canonical_form(g))
                return true;
        return false;
    };
    CHECK(has(named::star(3)));
    CHECK(has(named::star_plus(3)));
    CHECK(has(named::path(4)));

    auto ds = named::double_star(2, 2);
    CHECK(ng_record(ds).sum == 7);
    std::vector<Graph> one{ds};
    CHECK(collect_extremal(one, false).empty());
    std::vector<Graph> k3{named::complete(3)};
    CHECK(collect_extremal(k3, false).size() == 1);

    // Without dedup, isomorphic copies are kept.
    std::vector<int> reversed{3, 2, 1, 0};
    std::vector<Graph> twice{named::star(3), permute(named::star(3), reversed)};
    CHECK(collect_extremal(twice, false).size() == 2);
    CHECK(collect_extremal(twice, true).size() == 1);
}

TEST_CASE("record format")
{
    auto r = ng_record(named::cycle(5));
    auto line = format_record(r);
    CHECK(line == "Dhc\t5\t4\t4\t8\texceptional_c5");
    CHECK(parse_record(line) == r);
    CHECK_THROWS_AS(parse_record("Dhc\t5\t4"), ParseError);
    CHECK_THROWS_AS(parse_record("Dhc\t5\tx\t4\t8\tin_range"), ParseError);
    CHECK_THROWS_AS(parse_record("Dhc\t5\t4\t4\t8\tfine"), ParseError);

    auto graphs = enumerate_labeled_graphs(5);
    auto j = nlohmann::json::parse(summary_json(verify_stream(graphs)));
    CHECK(j["total"] == 1024);
    CHECK(j["counts"]["exceptional_c5"] == 12);
    CHECK(j["violations"] == 0);
    CHECK(j["ok"] == true);
}
