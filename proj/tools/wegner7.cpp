#include <iostream>

#include "wegner7/cli.hpp"

int main(int argc, char** argv) { return wegner7::cli::run(argc, argv, {std::cout, std::cerr}); }
