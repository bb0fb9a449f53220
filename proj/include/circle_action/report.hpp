#pragma once

#include <cstdint>
#include <string>

namespace circle_action {

/// Outcome of one randomized check; serialized as a JSON line.
struct CheckReport {
  std::string check;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double max_err = 0.0;
};

/// Seed for trial `trial` of a campaign seeded with `seed`. Trials draw
/// from independent engines so results do not depend on sharding.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

}  // namespace circle_action
