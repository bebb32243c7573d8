#include <iostream>

#include "hooklab/cli.hpp"

int main(int argc, char** argv) { return hooklab::cli::run(argc, argv, std::cout, std::cerr); }
