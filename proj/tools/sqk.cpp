#include <iostream>

#include "sqk_cli.hpp"

int main(int argc, char** argv) { return sqk::cli::run(argc, argv, std::cout, std::cerr); }
