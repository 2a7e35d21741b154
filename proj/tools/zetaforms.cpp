#include <iostream>
#include <string>
#include <vector>

#include "zetaforms/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return zetaforms::cli::run(args, std::cout, std::cerr);
}
