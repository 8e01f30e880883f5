#include <iostream>

#include "dsum_cli.hpp"

int main(int argc, char** argv) { return dsum::cli::run(argc, argv, std::cout, std::cerr); }
