#include <iostream>

#include "ainf/cli.hpp"

int main(int argc, char** argv) {
    return ainf::run_cli(argc, argv, std::cout, std::cerr);
}
