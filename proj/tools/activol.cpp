#include <iostream>

#include "activol/cli.hpp"

int main(int argc, char **argv) { return activol::run_cli(argc, argv, std::cout, std::cerr); }
