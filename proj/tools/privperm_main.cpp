#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "privperm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return privperm::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "privperm: " << e.what() << '\n';
    return privperm::cli::kCheckFailed;
  }
}
