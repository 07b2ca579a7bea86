#include <iostream>
#include <vector>

#include "gpw/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gpw::run_command(args, std::cout, std::cerr);
}
