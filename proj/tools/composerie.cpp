#include "composerie/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return composerie::cli::run(argc, argv, std::cout, std::cerr); }
