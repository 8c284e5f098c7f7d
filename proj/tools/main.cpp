#include <iostream>

#include "scheme_atlas_cli/cli.hpp"

int main(int argc, char** argv) { return atlas::cli::run_cli(argc, argv, std::cout, std::cerr); }
