#include <iostream>

#include "potmono/cli.hpp"

int main(int argc, char** argv) { return potmono::cli::main(argc, argv, std::cout, std::cerr); }
