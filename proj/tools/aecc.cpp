#include <iostream>

#include "aecc/cli.hpp"

int main(int argc, char** argv) { return aecc::run_cli(argc, argv, std::cout, std::cerr); }
