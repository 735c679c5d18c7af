#include <iostream>

#include "mpramsey/cli.hpp"

int main(int argc, char** argv) { return mpramsey::run_cli(argc, argv, std::cout, std::cerr); }
