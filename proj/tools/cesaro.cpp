#include <iostream>

#include "cesaro/cli.hpp"

int main(int argc, char** argv) { return cesaro::run_cli(argc, argv, std::cout, std::cerr); }
