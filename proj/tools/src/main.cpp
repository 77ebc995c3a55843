#include <iostream>

#include "shuffle_spectra_cli/cli.hpp"

int main(int argc, char** argv) { return shuffle_spectra::cli::run(argc, argv, std::cout, std::cerr); }
