#pragma once

// Brute-force reference computations used by the test suites. Nothing here
// calls into the library's enumeration or recovery code paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "circle_action/invariants.hpp"

namespace oracle {

using circle_action::Exponent;
using circle_action::ExponentVector;
using circle_action::Weight;

inline Weight charge(std::span<const Weight> weights, const std::vector<Exponent>& flat) {
  // flat = (k_1..k_m, kbar_1..kbar_m)
  const std::size_t m = weights.size();
  Weight c = 0;
  for (std::size_t j = 0; j < m; ++j) c += weights[j] * (Weight(flat[j]) - Weight(flat[m + j]));
  return c;
}

inline ExponentVector unflatten(const std::vector<Exponent>& flat) {
  const std::size_t m = flat.size() / 2;
  return ExponentVector({flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(m)},
                        {flat.begin() + static_cast<std::ptrdiff_t>(m), flat.end()});
}

/// Calls fn on every flat exponent tuple of length 2m with total degree <= max_degree.
inline void for_each_exponent(std::size_t m, std::uint64_t max_degree,
                              const std::function<void(const std::vector<Exponent>&)>& fn) {
  std::vector<Exponent> flat(2 * m, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos, std::uint64_t left) {
    if (pos == flat.size()) {
      fn(flat);
      return;
    }
    for (std::uint64_t x = 0; x <= left; ++x) {
      flat[pos] = static_cast<Exponent>(x);
      rec(pos + 1, left - x);
    }
    flat[pos] = 0;
  };
  rec(0, max_degree);
}

/// All invariant exponent vectors of degree <= max_degree.
inline std::vector<ExponentVector> invariant_vectors(std::span<const Weight> weights, std::uint64_t max_degree) {
  std::vector<ExponentVector> out;
  for_each_exponent(weights.size(), max_degree, [&](const std::vector<Exponent>& flat) {
    if (charge(weights, flat) == 0) out.push_back(unflatten(flat));
  });
  return out;
}

/// Irreducible invariant vectors of degree <= max_degree: nonzero invariant
/// vectors with no nonzero invariant proper sub-vector. No box bound assumed.
inline std::set<ExponentVector> irreducibles(std::span<const Weight> weights, std::uint64_t max_degree) {
  const auto all = invariant_vectors(weights, max_degree);
  std::set<ExponentVector> out;
  for (const auto& e : all) {
    if (e.is_zero()) continue;
    const bool reducible = std::any_of(all.begin(), all.end(), [&](const ExponentVector& v) {
      return !v.is_zero() && v != e && v.divides(e);
    });
    if (!reducible) out.insert(e);
  }
  return out;
}

}  // namespace oracle
