#include <iostream>

#include "tracewise/cli.hpp"

int main(int argc, char** argv) { return tracewise::run_cli(argc, argv, std::cout, std::cerr); }
