#include <rotrem/cli.hpp>

#include <iostream>

int main(int argc, char **argv) { return rotrem::cli::run(argc, argv, std::cout, std::cerr); }
