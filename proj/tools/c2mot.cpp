#include <iostream>
#include <string>
#include <vector>

#include "c2mot/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return c2mot::run_cli(args, std::cout, std::cerr);
}
