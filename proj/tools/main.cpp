#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return qcyc::cli::run(argc, argv, std::cout, std::cerr); }
