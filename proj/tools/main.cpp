#include <iostream>

#include "systema/cli.hpp"

int main(int argc, char** argv) { return systema::runCli(argc, argv, std::cout, std::cerr); }
