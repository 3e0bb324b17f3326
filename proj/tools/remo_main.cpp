#include <iostream>

#include "remo/cli.hpp"

int main(int argc, char** argv) { return remo::cli_main(argc, argv, std::cout, std::cerr); }
