#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace circle_action {

using Weight = std::int64_t;

/// A linear circle action on R^t x C^m in normal form: the circle acts
/// trivially on the R^t factor and by z_j -> e^{i theta w_j} z_j on C^m.
///
/// Instances are always canonical: weights positive, sorted ascending and
/// coprime as a whole (when m >= 1). Use canonicalize() for raw input.
class ActionSpec {
 public:
  /// Builds a spec from already-normalized data. Weights are sorted; throws
  /// PreconditionViolation on a non-positive weight and NotEffective when
  /// gcd(weights) > 1.
  static ActionSpec make(std::size_t trivial_dim, std::vector<Weight> weights);

  [[nodiscard]] std::size_t trivial_dim() const noexcept { return trivial_dim_; }
  [[nodiscard]] std::span<const Weight> weights() const noexcept { return weights_; }
  [[nodiscard]] std::size_t m() const noexcept { return weights_.size(); }
  [[nodiscard]] std::size_t n() const noexcept { return trivial_dim_ + 2 * weights_.size(); }
  [[nodiscard]] Weight max_weight() const noexcept { return weights_.empty() ? 0 : weights_.back(); }

  friend bool operator==(const ActionSpec&, const ActionSpec&) = default;

 private:
  ActionSpec(std::size_t trivial_dim, std::vector<Weight> weights)
      : trivial_dim_(trivial_dim), weights_(std::move(weights)) {}

  std::size_t trivial_dim_ = 0;
  std::vector<Weight> weights_;
};

/// Normalizes arbitrary integer weights: signs are dropped (complex
/// conjugation), zero weights move into the trivial factor (+2 each) and the
/// rest are sorted. Throws NotEffective if the surviving weights share a
/// common factor.
ActionSpec canonicalize(std::span<const Weight> raw_weights, std::size_t raw_trivial_dim = 0);
ActionSpec canonicalize(std::initializer_list<Weight> raw_weights, std::size_t raw_trivial_dim = 0);

/// Non-empty set of 0-based coordinate indices, kept sorted and unique.
/// Index j here is the S-set subscript j+1.
class IndexSet {
 public:
  explicit IndexSet(std::vector<std::size_t> indices);
  IndexSet(std::initializer_list<std::size_t> indices) : IndexSet(std::vector<std::size_t>(indices)) {}

  /// Set with bit j of mask meaning index j.
  static IndexSet from_mask(std::uint64_t mask);

  [[nodiscard]] std::span<const std::size_t> indices() const noexcept { return indices_; }
  [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
  [[nodiscard]] bool contains(std::size_t j) const;
  [[nodiscard]] bool is_subset_of(const IndexSet& other) const;
  /// "S_135"-style label with 1-based subscripts; comma-separated once m > 9.
  [[nodiscard]] std::string label() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Order of a stabilizer subgroup: a positive integer, or infinite for the
/// whole circle (the origin of C^m).
class IsotropyOrder {
 public:
  static constexpr IsotropyOrder infinite() noexcept { return IsotropyOrder(); }
  explicit IsotropyOrder(Weight finite);

  [[nodiscard]] bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws PreconditionViolation when infinite.
  [[nodiscard]] Weight value() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const IsotropyOrder&, const IsotropyOrder&) = default;

 private:
  constexpr IsotropyOrder() noexcept = default;
  std::optional<Weight> value_;
};

/// gcd of the weights indexed by face: the simplex label of that face.
Weight gcd_label(const ActionSpec& spec, const IndexSet& face);

/// Stabilizer order of points whose non-zero coordinates are exactly
/// `support`. Empty support is the origin, with infinite stabilizer.
IsotropyOrder isotropy_order(const ActionSpec& spec, std::span<const std::size_t> support);

}  // namespace circle_action
