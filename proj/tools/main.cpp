#include <iostream>

#include "cauchy_sketch/cli.hpp"

int main(int argc, char** argv) { return cauchy_sketch::run_cli(argc, argv, std::cout, std::cerr); }
