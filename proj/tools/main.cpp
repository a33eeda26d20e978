#include <iostream>

#include "clonekit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return clonekit::run_cli(args, std::cout, std::cerr);
}
