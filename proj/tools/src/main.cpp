#include "orbisym_cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return orbisym::cli::run(argc, argv, std::cout, std::cerr); }
