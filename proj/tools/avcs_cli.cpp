#include <iostream>

#include "avcs/cli.hpp"

int main(int argc, char** argv) { return avcs::cli::run(argc, argv, std::cout, std::cerr); }
