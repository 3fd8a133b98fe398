#include <iostream>

#include "ezeta/cli.hpp"

int main(int argc, char** argv) { return ezeta::run_cli(argc, argv, std::cout, std::cerr); }
