#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return twoblocks::cli::run(argc, argv, std::cout, std::cerr); }
