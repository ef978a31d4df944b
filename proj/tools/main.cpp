#include <iostream>
#include <string>
#include <vector>

#include "cfs_tool/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cfs::tool::run_cli(args, std::cout, std::cerr);
}
