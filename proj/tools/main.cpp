#include <iostream>
#include <string>
#include <vector>

#include "seiarb/runner.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return seiarb::cli::dispatch(args, std::cout, std::cerr);
}
