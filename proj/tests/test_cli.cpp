#include <rid/cli.hpp>

#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

auto run(std::vector<std::string> args, const std::string & input = "") -> Outcome
{
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = rid::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

auto last_line(const std::string & text) -> std::string
{
    auto trimmed = text.substr(0, text.find_last_not_of('\n') + 1);
    return trimmed.substr(trimmed.find_last_of('\n') + 1);
}

}

TEST_CASE("solve")
{
    auto r = run({"solve", "--k", "2"}, "DqK\n");
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("DqK\t5\t2\t4\tbnb\t"));

    auto brute = run({"solve", "--k", "2", "--method", "brute"}, "DqK\n");
    CHECK(brute.code == 0);
    CHECK(brute.out.starts_with("DqK\t5\t2\t4\tbrute\t"));

    auto edge_list = run({"solve"}, "2 1\n0 1\n");
    CHECK(edge_list.out.starts_with("A_\t2\t2\t2\t"));
}

TEST_CASE("ng over an enumeration")
{
    auto r = run({"ng", "--enumerate", "5"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(last_line(r.out));
    CHECK(j["total"] == 1024);
    CHECK(j["counts"]["exceptional_c5"] == 12);
    CHECK(j["violations"] == 0);

    auto dedup = nlohmann::json::parse(last_line(run({"ng", "--enumerate", "5", "--dedup"}).out));
    CHECK(dedup["total"] == 34);
    CHECK(dedup["counts"]["exceptional_c5"] == 1);
}

TEST_CASE("ng is independent of the worker count")
{
    auto one = run({"ng", "--enumerate", "6", "--extremal"});
    auto many = run({"ng", "--enumerate", "6", "--extremal", "--workers", "4"});
    CHECK(one.code == 0);
    CHECK(one.out == many.out);
    auto seeded = run({"ng", "--random", "8", "--count", "30", "--seed", "5"});
    CHECK(seeded.out == run({"ng", "--random", "8", "--count", "30", "--seed", "5", "--workers", "3"}).out);
    CHECK(seeded.out != run({"ng", "--random", "8", "--count", "30", "--seed", "6"}).out);
}

TEST_CASE("codec round trip")
{
    for (std::string input : {"DqK\nA_\n@\n", ">>graph6<<Dhc\n", "3 2\n0 1\n1 2\n2 0\n"}) {
        auto r = run({"codec", "--roundtrip"}, input);
        CHECK(r.code == 0);
        CHECK(r.out == input);
    }
    CHECK(run({"codec", "--to", "edgelist"}, "A_\n").out == "2 1\n0 1\n");
    CHECK(run({"codec", "--to", "graph6"}, "2 1\n0 1\n").out == "A_\n");
}

TEST_CASE("classify, reduce and prism")
{
    auto c = run({"classify", "--verify"}, "Dhc\nCr\n");
    CHECK(c.code == 0);
    CHECK(c.out.find("c5") != std::string::npos);

    auto red = run({"reduce", "--enumerate", "4", "--dedup"});
    CHECK(red.code == 2);  // non-bipartite graphs in the stream
    auto ok = run({"reduce", "--k", "2"}, "A_\nCr\n");
    CHECK(ok.code == 0);
    CHECK(nlohmann::json::parse(last_line(ok.out))["mismatches"] == 0);

    auto p = run({"prism", "--enumerate", "4", "--k", "3"});
    CHECK(p.code == 0);
    CHECK(nlohmann::json::parse(last_line(p.out))["mismatches"] == 0);
}

TEST_CASE("errors")
{
    auto bad = run({"solve"}, "A_\nA_x\n");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);

    CHECK(run({"solve", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"solve", "--k", "0"}).code == 2);
    CHECK(run({"solve", "--workers", "0"}).code == 2);
    CHECK(run({"solve", "--enumerate", "3", "--input", "x"}).code == 2);
    CHECK(run({"solve", "--input", "/nonexistent/file"}).code == 2);
    CHECK(run({"reduce", "--k", "1"}, "A_\n").code == 2);

    auto budget = run({"solve", "--method", "brute", "--budget-labelings", "10"}, "Dhc\n");
    CHECK(budget.code == 2);
    CHECK(budget.err.find("line 1") != std::string::npos);
}

TEST_CASE("output file")
{
    auto path = std::filesystem::temp_directory_path() / "ridom_cli_test.tsv";
    auto r = run({"solve", "--out", path.string()}, "Dhc\n");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str() == run({"solve"}, "Dhc\n").out);
    std::filesystem::remove(path);
}
