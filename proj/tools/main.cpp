#include <iostream>

#include "kantorovich/cli.hpp"

int main(int argc, char** argv) { return kantorovich::run_cli(argc, argv, std::cout, std::cerr); }
