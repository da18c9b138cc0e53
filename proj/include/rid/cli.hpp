#pragma once

#include <rid/solver.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace rid::cli {

enum ExitCode : int
{
    success = 0,
    check_failed = 1,  // bound violation or oracle mismatch
    usage_error = 2    // bad flags, malformed input, exceeded budget
};

struct RunConfig
{
    std::string subcommand;
    int k = 2;
    Budget budget;
    int workers = 1;
    std::optional<std::string> input_path;
    std::optional<int> enumerate_n;
    std::optional<int> random_n;
    int random_count = 100;
    std::uint64_t seed = 0;
    std::optional<std::string> output_path;
    bool dedup = false;
};

// args excludes the program name. Reads graphs from in when no other input
// source is given; writes the report to out unless --out is set.
auto run(std::span<const std::string> args, std::istream & in, std::ostream & out, std::ostream & err) -> int;

}
