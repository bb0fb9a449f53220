#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "circle_action/action.hpp"

namespace circle_action::cli {

enum class Command { Invariants, Stratify, Recover, Roundtrip, Verify };
enum class Format { Text, Json };

struct CommandConfig {
  Command command = Command::Invariants;
  std::optional<std::vector<Weight>> weights;
  std::size_t trivial_dim = 0;
  std::optional<std::string> diagram_path;
  Format format = Format::Text;
  std::optional<std::string> dot_path;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
  double tol = 1e-9;
  Weight max_weight = 30;
  std::size_t max_m = 6;
  std::size_t max_trivial_dim = 4;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Parses argv. On --help or a usage error returns nullopt with the exit
/// code in `exit_code` (0 for help, 2 for errors); messages go to out/err.
std::optional<CommandConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                        int& exit_code);

/// Executes one command; library errors become a one-line diagnostic on
/// err and exit code 2.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

}  // namespace circle_action::cli
