#include <iostream>

#include "run.hpp"

int main(int argc, char** argv) { return adscmc::cli::cli_main(argc, argv, std::cout, std::cerr); }
