#include <iostream>
#include <string>
#include <vector>

#include "memcap/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return memcap::run_cli(args, std::cout, std::cerr);
}
