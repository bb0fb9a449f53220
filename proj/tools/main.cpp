#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  int exit_code = circle_action::cli::kExitOk;
  const auto config = circle_action::cli::parse_args(argc, argv, std::cout, std::cerr, exit_code);
  if (!config) return exit_code;
  return circle_action::cli::run(*config, std::cout, std::cerr);
}
