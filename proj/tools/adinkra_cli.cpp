#include <iostream>

#include "adinkra/cli.hpp"

int main(int argc, char** argv) { return adinkra::cli::main(argc, argv, std::cout, std::cerr); }
