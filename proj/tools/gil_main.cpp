#include <iostream>

#include "gil/commands.hpp"

int main(int argc, char** argv) { return gil::run_cli(argc, argv, std::cout, std::cerr); }
