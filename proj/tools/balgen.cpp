#include <iostream>
#include <vector>

#include "balgen/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return balgen::cli::cli_main(std::move(args), std::cin, std::cout, std::cerr);
}
