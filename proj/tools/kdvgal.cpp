#include <iostream>

#include "kdvgal/cli.hpp"

int main(int argc, char** argv) { return kdvgal::run_cli(argc, argv, std::cout, std::cerr); }
