#include <iostream>

#include "taylor/cli.hpp"

int main(int argc, char** argv) { return taylor::run_cli(argc, argv, std::cout, std::cerr); }
