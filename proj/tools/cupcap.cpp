#include <iostream>

#include "cupcap/cli.hpp"

int main(int argc, char** argv) { return cupcap::cli::run(argc, argv, std::cout, std::cerr); }
