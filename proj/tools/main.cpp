#include "netmap/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return netmap::run_cli(argc, argv, std::cout, std::cerr); }
