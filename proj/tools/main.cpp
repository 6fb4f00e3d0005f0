#include <iostream>

#include "wgcd_cli.hpp"

int main(int argc, char** argv) { return wgcd::cli::run(argc, argv, std::cout, std::cerr); }
