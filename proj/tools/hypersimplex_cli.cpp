#include <iostream>
#include <string>
#include <vector>

#include <hypersimplex/cli.hpp>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return hypersimplex::cli::run_cli(args, std::cout, std::cerr);
}
