#include <iostream>

#include "aw/cli.hpp"

int main(int argc, char **argv) { return aw::run_cli(argc, argv, std::cout, std::cerr); }
