#include <iostream>

#include "opengames/dsl/cli.hpp"

int main(int argc, char** argv) { return og::dsl::run_cli(argc, argv, std::cout, std::cerr); }
