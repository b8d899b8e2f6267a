#include <iostream>

#include "qillum/cli.hpp"

int main(int argc, char** argv) { return qillum::cli::main(argc, argv, std::cout, std::cerr); }
