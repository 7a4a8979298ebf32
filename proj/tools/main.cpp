#include <iostream>
#include <string>
#include <vector>

#include "stepalg/jobs.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stepalg::run_command(args, std::cout, std::cerr);
}
