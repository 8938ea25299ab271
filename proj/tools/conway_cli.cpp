#include <iostream>
#include <string>
#include <vector>

#include "conway/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return conway::run_cli(args, std::cout, std::cerr);
}
