#include "reedcheck/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return reedcheck::cli::main(argc, argv, std::cout, std::cerr); }
