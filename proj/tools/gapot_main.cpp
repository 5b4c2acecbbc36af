#include <iostream>

#include "gapot/cli.hpp"

int main(int argc, char** argv) { return gapot::cli::run(argc, argv, std::cout, std::cerr); }
