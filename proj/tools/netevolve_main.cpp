#include <iostream>

#include "netevolve/cli.hpp"

int main(int argc, char** argv) {
    return netevolve::run_cli(argc, argv, std::cout, std::cerr);
}
