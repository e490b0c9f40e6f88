#include <iostream>
#include <string>
#include <vector>

#include "commord/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return commord::cli::run(args, std::cout, std::cerr);
}
