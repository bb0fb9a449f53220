#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "circle_action/action.hpp"
#include "circle_action/report.hpp"
#include "circle_action/stratification.hpp"

namespace circle_action {

struct InferredDimensions {
  std::size_t n = 0;
  std::size_t trivial_dim = 0;
  std::size_t m = 0;

  friend bool operator==(const InferredDimensions&, const InferredDimensions&) = default;
};

/// Sorted weights with multiplicity.
struct WeightMultiset {
  std::vector<Weight> weights;

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;
};

/// Number of weights attributed to one stratum.
struct StratumMultiplicity {
  std::string id;
  Weight order;
  std::int64_t multiplicity;
};

struct Recovery {
  InferredDimensions dims;
  WeightMultiset weights;
  /// One entry per finite-order stratum, in diagram order.
  std::vector<StratumMultiplicity> multiplicities;
};

/// n = dim(top) + 1, trivial_dim = dim(distinguished), m = (n - trivial_dim) / 2.
/// Throws NoDistinguishedStratum, ParityError or MalformedDiagram.
InferredDimensions infer_dimensions(const StratificationDiagram& diagram);

/// Recovers the weights from dimensions, isotropy orders and the closure
/// order only; face data is never read.
///
/// A finite stratum S of codimension c below the top stratum spans c/2 fewer
/// simplex vertices than m. Walking strata by decreasing depth, S owns the
/// vertices not already owned by strata strictly below it, and each owned
/// vertex carries the weight order(S).
///
/// Throws NegativeMultiplicity, NotEffective, CountMismatch, ParityError or
/// MalformedDiagram (repeated orders, order not compatible with
/// divisibility, more than m vertices lost).
Recovery recover(const StratificationDiagram& diagram);

WeightMultiset recover_weights(const StratificationDiagram& diagram);

/// recover(orbit_strata(spec)) reproduces the weights and trivial factor.
bool roundtrip(const ActionSpec& spec);

/// Uniformly random effective spec: m in [1, max_m], weights in
/// [1, max_weight] redrawn until coprime, trivial_dim in [0, max_trivial_dim].
ActionSpec random_effective_spec(std::uint64_t seed, std::size_t max_m, Weight max_weight,
                                 std::size_t max_trivial_dim);

/// Round trip over `trials` random specs; trial i uses
/// random_effective_spec(trial_seed(seed, i), ...). A trial that throws
/// counts as a failure.
CheckReport roundtrip_campaign(std::uint64_t seed, std::uint64_t trials, std::size_t max_m, Weight max_weight,
                               std::size_t max_trivial_dim);

}  // namespace circle_action
