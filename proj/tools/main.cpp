#include <iostream>

#include "rwf/cli.hpp"

int main(int argc, char** argv) { return rwf::cli::run(argc, argv, std::cout, std::cerr); }
