#include "circle_action/action.hpp"

#include <algorithm>
#include <numeric>

#include "circle_action/error.hpp"

namespace circle_action {

namespace {

Weight gcd_of(std::span<const Weight> weights) {
  Weight g = 0;
  for (Weight w : weights) g = std::gcd(g, w);
  return g;
}

}  // namespace

ActionSpec ActionSpec::make(std::size_t trivial_dim, std::vector<Weight> weights) {
  for (Weight w : weights) {
    if (w <= 0) {
      throw Error(ErrorCode::PreconditionViolation,
                  "weight " + std::to_string(w) + " is not positive; use canonicalize()");
    }
  }
  std::sort(weights.begin(), weights.end());
  if (!weights.empty()) {
    const Weight g = gcd_of(weights);
    if (g != 1) {
      throw Error(ErrorCode::NotEffective, "weights share the common factor " + std::to_string(g));
    }
  }
  return ActionSpec(trivial_dim, std::move(weights));
}

ActionSpec canonicalize(std::span<const Weight> raw_weights, std::size_t raw_trivial_dim) {
  std::vector<Weight> weights;
  weights.reserve(raw_weights.size());
  std::size_t trivial_dim = raw_trivial_dim;
  for (Weight w : raw_weights) {
    if (w == 0) {
      trivial_dim += 2;
    } else {
      weights.push_back(w < 0 ? -w : w);
    }
  }
  return ActionSpec::make(trivial_dim, std::move(weights));
}

ActionSpec canonicalize(std::initializer_list<Weight> raw_weights, std::size_t raw_trivial_dim) {
  return canonicalize(std::span<const Weight>(raw_weights.begin(), raw_weights.size()), raw_trivial_dim);
}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.empty()) throw Error(ErrorCode::PreconditionViolation, "index set must be non-empty");
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
  std::vector<std::size_t> indices;
  for (std::size_t j = 0; j < 64; ++j) {
    if ((mask >> j) & 1U) indices.push_back(j);
  }
  return IndexSet(std::move(indices));
}

bool IndexSet::contains(std::size_t j) const {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

std::string IndexSet::label() const {
  const bool separate = indices_.back() >= 9;
  std::string out = "S_";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (separate && i > 0) out += ',';
    out += std::to_string(indices_[i] + 1);
  }
  return out;
}

IsotropyOrder::IsotropyOrder(Weight finite) : value_(finite) {
  if (finite <= 0) throw Error(ErrorCode::PreconditionViolation, "isotropy order must be positive");
}

Weight IsotropyOrder::value() const {
  if (!value_) throw Error(ErrorCode::PreconditionViolation, "isotropy order is infinite");
  return *value_;
}

std::string IsotropyOrder::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

Weight gcd_label(const ActionSpec& spec, const IndexSet& face) {
  Weight g = 0;
  for (std::size_t j : face.indices()) {
    if (j >= spec.m()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "index " + std::to_string(j) + " outside 0.." + std::to_string(spec.m()));
    }
    g = std::gcd(g, spec.weights()[j]);
  }
  return g;
}

IsotropyOrder isotropy_order(const ActionSpec& spec, std::span<const std::size_t> support) {
  if (support.empty()) return IsotropyOrder::infinite();
  return IsotropyOrder(gcd_label(spec, IndexSet(std::vector<std::size_t>(support.begin(), support.end()))));
}

}  // namespace circle_action
