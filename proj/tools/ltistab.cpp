#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ltistab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ltistab::cli_dispatch(args, std::cout, std::cerr, [](const char* name) { return std::getenv(name); });
}
