#include <unistd.h>

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "ciflie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* color = std::getenv("COLOR");
  ciflie::CliOptions opts;
  opts.color = isatty(STDOUT_FILENO) && !(color && std::strcmp(color, "0") == 0);
  return ciflie::run_cli(args, std::cout, std::cerr, opts);
}
