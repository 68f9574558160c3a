#include <iostream>

#include "impart/cli.hpp"

int main(int argc, char** argv) {
    return impart::cli::run_cli(argc, argv, std::cout, std::cerr);
}
