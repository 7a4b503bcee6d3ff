#include <iostream>

#include "qfib/cli.hpp"

int main(int argc, char** argv) { return qfib::run_cli(argc, argv, std::cout, std::cerr); }
