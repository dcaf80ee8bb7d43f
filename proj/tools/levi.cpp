#include <iostream>

#include "levi/cli.hpp"

int main(int argc, char** argv) { return levi::run_cli(argc, argv, std::cout, std::cerr); }
