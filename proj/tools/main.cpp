#include <iostream>

#include "hmap/cli.hpp"

int main(int argc, char** argv) { return hmap::run_cli(argc, argv, std::cout, std::cerr); }
