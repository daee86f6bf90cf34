#include "twisthom/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return twisthom::run_cli(argc, argv, std::cout, std::cerr); }
