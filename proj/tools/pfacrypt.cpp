#include <iostream>

#include "pfa/cli.hpp"

int main(int argc, char** argv) {
    return pfa::cli_main(argc, argv, std::cout, std::cerr);
}
