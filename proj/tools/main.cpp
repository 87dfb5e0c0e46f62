#include <iostream>

#include "kemeny/cli.hpp"

int main(int argc, char** argv) { return kemeny::run_cli(argc, argv, std::cout, std::cerr); }
