#include <iostream>

#include "relwb/dispatch.hpp"

int main(int argc, char** argv) { return relwb::cli::runCli(argc, argv, std::cout, std::cerr); }
