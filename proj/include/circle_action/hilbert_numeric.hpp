#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "circle_action/action.hpp"
#include "circle_action/invariants.hpp"
#include "circle_action/report.hpp"

namespace circle_action {

/// A point (z_1, ..., z_m) of C^m.
class OrbitPoint {
 public:
  OrbitPoint() = default;
  explicit OrbitPoint(std::vector<std::complex<double>> coords) : coords_(std::move(coords)) {}
  OrbitPoint(std::initializer_list<std::complex<double>> coords) : coords_(coords) {}

  [[nodiscard]] std::span<const std::complex<double>> coords() const noexcept { return coords_; }
  [[nodiscard]] std::size_t m() const noexcept { return coords_.size(); }
  [[nodiscard]] OrbitPoint scaled(double t) const;

 private:
  std::vector<std::complex<double>> coords_;
};

/// Values of the Hilbert map, one per generator in generator order.
using HilbertImage = std::vector<double>;

/// e^{i theta} . p, i.e. coordinate j multiplied by e^{i w_j theta}.
OrbitPoint rotate(const ActionSpec& spec, double theta, const OrbitPoint& p);

HilbertImage evaluate_hilbert_map(std::span<const InvariantGenerator> generators, const OrbitPoint& p);

/// min over theta of the max-norm distance between rotate(theta, z) and w.
/// Grid search over 4096 angles, then 40 halving steps around the best
/// grid candidates. A verification aid; adequate for weights up to 64.
double orbit_distance(const ActionSpec& spec, const OrbitPoint& z, const OrbitPoint& w);

bool same_orbit(const ActionSpec& spec, const OrbitPoint& z, const OrbitPoint& w, double tol);

/// Membership of y in the image of the Hilbert map for weights (alpha1,
/// alpha2): y1, y2 >= 0 and y3^2 + y4^2 = y1^alpha2 y2^alpha1, all up to tol.
/// Throws NotCoprime, LengthMismatch (y must have 4 entries).
bool check_m2_membership(Weight alpha1, Weight alpha2, std::span<const double> y, double tol);

/// Evaluates sigma at r e_j and checks that only the |z_j|^2 slot is
/// non-zero, with value r^2.
bool check_axes_image(const ActionSpec& spec, std::span<const InvariantGenerator> generators, std::size_t j,
                      double r);

/// Uniform sample from the closed unit polydisc, drawn from the engine of
/// trial_seed(seed, trial).
OrbitPoint sample_polydisc(std::size_t m, std::uint64_t seed, std::uint64_t trial);

CheckReport check_invariance(const ActionSpec& spec, std::span<const InvariantGenerator> generators,
                             std::uint64_t seed, std::uint64_t trials);
CheckReport check_homogeneity(const ActionSpec& spec, std::span<const InvariantGenerator> generators,
                              std::uint64_t seed, std::uint64_t trials);
CheckReport check_separation(const ActionSpec& spec, std::span<const InvariantGenerator> generators,
                             std::uint64_t seed, std::uint64_t trials);
/// Only for m = 2. max_err is the worst relation residual
/// |y3^2 + y4^2 - y1^a2 y2^a1| / (1 + |y1|^a2 |y2|^a1).
CheckReport check_m2_image(const ActionSpec& spec, std::span<const InvariantGenerator> generators,
                           std::uint64_t seed, std::uint64_t trials, double tol);
CheckReport check_axes(const ActionSpec& spec, std::span<const InvariantGenerator> generators,
                       std::uint64_t seed, std::uint64_t trials);

/// All checks applicable to spec, with generators from its Hilbert basis.
std::vector<CheckReport> run_numeric_suite(const ActionSpec& spec, std::uint64_t seed, std::uint64_t trials,
                                           double tol);

}  // namespace circle_action
