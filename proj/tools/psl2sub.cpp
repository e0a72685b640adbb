#include <iostream>

#include "psl2/cli.hpp"

int main(int argc, char** argv) { return psl2::cli::run_cli(argc, argv, std::cout, std::cerr); }
