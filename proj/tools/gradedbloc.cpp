#include <iostream>

#include "gradedbloc/cli.hpp"

int main(int argc, char** argv) { return gradedbloc::cli::run(argc, argv, std::cout, std::cerr); }
