#include <iostream>

#include "flexdist/cli.hpp"

int main(int argc, char** argv) { return flexdist::cli::run(argc, argv, std::cout, std::cerr); }
