#include <iostream>
#include <string>
#include <vector>

#include "hmw/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  const auto result = hmw::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
