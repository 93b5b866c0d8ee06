#include <iostream>

#include "eigenop/cli.hpp"

int main(int argc, char** argv) { return eigenop::cli::main_entry(argc, argv, std::cout, std::cerr); }
