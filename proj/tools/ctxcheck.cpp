#include <iostream>

#include "lbc/cli.hpp"

int main(int argc, char** argv) { return lbc::run_cli(argc, argv, std::cout, std::cerr); }
