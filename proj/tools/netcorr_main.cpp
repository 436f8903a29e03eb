#include <iostream>
#include <string>
#include <vector>

#include "netcorr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return netcorr::run_cli(args, std::cout, std::cerr);
}
