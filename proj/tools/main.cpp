#include <iostream>

#include "cobord/cli/cli.hpp"

int main(int argc, char** argv) { return cobord::cli::run(argc, argv, std::cout, std::cerr); }
