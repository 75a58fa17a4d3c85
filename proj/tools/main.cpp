#include "sierp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sierp::run_cli(argc, argv, std::cout, std::cerr); }
