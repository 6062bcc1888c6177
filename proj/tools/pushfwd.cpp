#include <iostream>
#include <vector>

#include "pushfwd/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pushfwd::run_cli(args, std::cout, std::cerr);
}
