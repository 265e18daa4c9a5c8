#include "geninv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return geninv::cli::run(argc, argv, std::cout, std::cerr); }
