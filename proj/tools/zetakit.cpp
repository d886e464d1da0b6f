#include <iostream>
#include <string>
#include <vector>

#include "zetakit_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zetakit::cli::run_cli(std::move(args), std::cout, std::cerr);
}
