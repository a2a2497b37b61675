#include <iostream>

#include "lierigid/cli.hpp"

int main(int argc, char** argv) { return lierigid::parse_and_dispatch(argc, argv, std::cout, std::cerr); }
