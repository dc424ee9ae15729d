#include <iostream>

#include "gybe/cli.hpp"

int main(int argc, char** argv) { return gybe::cli::run(argc, argv, std::cout, std::cerr); }
