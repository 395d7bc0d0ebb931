#include <iostream>

#include "arshon/cli.hpp"

int main(int argc, char** argv) { return arshon::run_cli(argc, argv, std::cout, std::cerr); }
