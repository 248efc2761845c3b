#include <iostream>

#include "gieseker/cli.hpp"

int main(int argc, char** argv) { return gieseker::run_cli(argc, argv, std::cout, std::cerr); }
