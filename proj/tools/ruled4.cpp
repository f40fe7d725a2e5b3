#include <iostream>

#include "ruled4/cli.hpp"

int main(int argc, char** argv) { return ruled4::cli::run(argc, argv, std::cout, std::cerr); }
