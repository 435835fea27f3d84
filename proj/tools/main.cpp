#include <iostream>

#include "gsw/cli.hpp"

int main(int argc, char** argv) {
    return gsw::run_cli(argc, argv, std::cout, std::cerr);
}
