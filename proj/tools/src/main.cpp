#include <iostream>
#include <string>
#include <vector>

#include "zolo/cli/commands.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return zolo::cli::run(args, std::cout, std::cerr);
}
