#include <iostream>

#include "kmu/cli.hpp"

int main(int argc, char** argv) { return kmu::cli::main(argc, argv, std::cout, std::cerr); }
