#include "qwalk/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return qwalk::cli::main_entry(argc, argv, std::cout, std::cerr); }
