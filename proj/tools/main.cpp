#include <iostream>

#include "bmoll/cli.hpp"

int main(int argc, char** argv) { return bmoll::cli_main(argc, argv, std::cout, std::cerr); }
