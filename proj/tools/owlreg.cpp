#include <iostream>

#include "owlreg/cli.hpp"

int main(int argc, char** argv) { return owlreg::cli::run(argc, argv, std::cout, std::cerr); }
