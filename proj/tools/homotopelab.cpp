#include <iostream>

#include "homotopelab/cli.hpp"

int main(int argc, char** argv) { return homotopelab::run_cli(argc, argv, std::cout, std::cerr); }
