#include <iostream>

#include "holgraph_cli/cli.hpp"

int main(int argc, char** argv) {
  return holgraph::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
