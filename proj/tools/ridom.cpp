#include <rid/cli.hpp>

#include <iostream>
#include <string>
#include <vector>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return rid::cli::run(args, std::cin, std::cout, std::cerr);
}
