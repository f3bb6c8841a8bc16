#include <iostream>

#include "mif_cli.hpp"

int main(int argc, char** argv) { return mif::cli::run_cli(argc, argv, std::cout, std::cerr); }
