#include <iostream>

#include "crsphere/cli.hpp"

int main(int argc, char** argv) { return crs::cli::run(argc, argv, std::cout, std::cerr); }
