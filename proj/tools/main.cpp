#include <iostream>
#include <vector>

#include "dpsq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dpsq::run_cli(args, std::cout, std::cerr, &std::cin);
}
