#include "gradal/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return gradal::cli::run_cli(argc, argv, std::cout, std::cerr); }
