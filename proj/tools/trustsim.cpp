#include <iostream>

#include "sostrust/cli/commands.hpp"

int main(int argc, char** argv) {
  return sostrust::cli::run_cli(argc, argv, std::cout, std::cerr);
}
