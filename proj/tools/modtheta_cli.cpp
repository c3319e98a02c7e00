#include <iostream>

#include "modtheta/cli/app.hpp"

int main(int argc, char** argv) { return modtheta::cli::run(argc, argv, std::cout, std::cerr); }
