#include <iostream>

#include "convexia/cli.hpp"

int main(int argc, char** argv) { return convexia::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
