#include <iostream>

#include "satkit/cli.hpp"

int main(int argc, char** argv) {
    return satkit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
