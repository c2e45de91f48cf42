#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qtri::cli::main(argc, argv, std::cout, std::cerr); }
