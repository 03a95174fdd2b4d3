#include <iostream>
#include <string>
#include <vector>

#include "clasp/cli/app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return clasp::run_cli(args, std::cout, std::cerr);
}
