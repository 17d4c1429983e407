#include <iostream>
#include <vector>

#include "descmat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return descmat::run_cli(args, std::cout, std::cerr);
}
