#include <iostream>

#include "birkhoff/cli.hpp"

int main(int argc, char** argv) { return birkhoff::run_cli(argc, argv, std::cout, std::cerr); }
