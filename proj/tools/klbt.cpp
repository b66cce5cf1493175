#include <klbt/cli/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return klbt::cli::run(argc, argv, std::cout, std::cerr); }
