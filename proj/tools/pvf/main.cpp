#include <iostream>

#include "pvf/cli.hpp"

int main(int argc, char** argv) { return pvf::cli::main(argc, argv, std::cout, std::cerr); }
