#include <iostream>

#include "hpa/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hpa::cli::run(args, std::cout, std::cerr);
}
