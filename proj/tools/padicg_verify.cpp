// padicg-verify: runs identity suites over finite fields and reports the outcome.

#include <iostream>

#include "padicg/cli.hpp"

int main(int argc, char** argv) {
  using namespace padicg::cli;
  try {
    auto config = parse_args(argc, argv);
    if (!config) return kPass;
    return run(*config, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
    return kUsageError;
  }
}
