#include <iostream>

#include "puiseux/commands.hpp"

int main(int argc, char** argv) {
    return puiseux::run_cli(argc, argv, std::cout, std::cerr);
}
