#include "lpat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lpat::cli::run(argc, argv, std::cout, std::cerr); }
