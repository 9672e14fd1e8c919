#include "arfkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return arfkit::cli::run(argc, argv, std::cout, std::cerr); }
