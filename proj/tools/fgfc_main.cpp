#include "fgfc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fgfc::run_cli(argc, argv, std::cout, std::cerr); }
