#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  sbc::cli::Options options;
  options.color = sbc::cli::color_from_env();
  return sbc::cli::run(args, std::cout, std::cerr, options);
}
