#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "dsq/cli.hpp"

int main(int argc, char** argv) {
  const char* no_color = std::getenv("NO_COLOR");
  const bool color = isatty(STDOUT_FILENO) && (no_color == nullptr || *no_color == '\0');
  std::vector<std::string> args(argv + 1, argv + argc);
  return dsq::run_cli(args, std::cin, std::cout, std::cerr, color);
}
