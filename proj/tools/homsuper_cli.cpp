#include <iostream>
#include <string>
#include <vector>

#include "homsuper/cli_run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homsuper::run_cli(args, std::cout, std::cerr);
}
