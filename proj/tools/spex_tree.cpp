#include <iostream>

#include "spextree/cli.hpp"

int main(int argc, char** argv) { return spextree::run_cli(argc, argv, std::cout, std::cerr); }
