#include <iostream>

#include "topolab/cli.hpp"

int main(int argc, char** argv) { return topolab::cli::run(argc, argv, std::cout, std::cerr); }
