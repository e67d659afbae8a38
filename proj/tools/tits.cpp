#include "tits/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tits::cli::run(argc, argv, std::cout, std::cerr); }
