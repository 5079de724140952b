#include <iostream>
#include <string>
#include <vector>

#include "egth/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return egth::cli::run_command(args, std::cout, std::cerr);
}
