#include "circle_action/hilbert_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "circle_action/error.hpp"

namespace circle_action {

namespace {

constexpr std::size_t kGridSamples = 4096;
constexpr int kRefinements = 40;
constexpr std::size_t kRefinedCandidates = 8;
constexpr double kCheckTolerance = 1e-9;
constexpr double kZeroTolerance = 1e-12;

void require_length(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw Error(ErrorCode::LengthMismatch, std::string(what) + ": expected length " + std::to_string(expected) +
                                               ", got " + std::to_string(actual));
  }
}

double int_pow(double base, Weight exp) {
  double out = 1.0;
  for (Weight i = 0; i < exp; ++i) out *= base;
  return out;
}

std::complex<double> monomial_value(const ExponentVector& e, const OrbitPoint& p) {
  std::complex<double> value{1.0, 0.0};
  for (std::size_t j = 0; j < e.m(); ++j) {
    const auto z = p.coords()[j];
    for (Exponent i = 0; i < e.holomorphic()[j]; ++i) value *= z;
    for (Exponent i = 0; i < e.antiholomorphic()[j]; ++i) value *= std::conj(z);
  }
  return value;
}

double max_abs(const HilbertImage& image) {
  double out = 0.0;
  for (double v : image) out = std::max(out, std::abs(v));
  return out;
}

double max_norm_distance(const OrbitPoint& a, const OrbitPoint& b) {
  double out = 0.0;
  for (std::size_t j = 0; j < a.m(); ++j) out = std::max(out, std::abs(a.coords()[j] - b.coords()[j]));
  return out;
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(trial_seed(seed, trial));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t modulus_slot(std::span<const InvariantGenerator> generators, std::size_t j) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.part == GeneratorPart::ModulusSquared && g.exponents.holomorphic()[j] == 1) return i;
  }
  throw Error(ErrorCode::PreconditionViolation, "no |z_" + std::to_string(j + 1) + "|^2 generator");
}

}  // namespace

OrbitPoint OrbitPoint::scaled(double t) const {
  std::vector<std::complex<double>> out(coords_);
  for (auto& z : out) z *= t;
  return OrbitPoint(std::move(out));
}

OrbitPoint rotate(const ActionSpec& spec, double theta, const OrbitPoint& p) {
  require_length(spec.m(), p.m(), "rotate");
  std::vector<std::complex<double>> out(p.coords().begin(), p.coords().end());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] *= std::polar(1.0, static_cast<double>(spec.weights()[j]) * theta);
  }
  return OrbitPoint(std::move(out));
}

HilbertImage evaluate_hilbert_map(std::span<const InvariantGenerator> generators, const OrbitPoint& p) {
  HilbertImage image;
  image.reserve(generators.size());
  for (const auto& g : generators) {
    require_length(g.exponents.m(), p.m(), "evaluate_hilbert_map");
    const auto value = monomial_value(g.exponents, p);
    image.push_back(g.part == GeneratorPart::ImaginaryPart ? value.imag() : value.real());
  }
  return image;
}

double orbit_distance(const ActionSpec& spec, const OrbitPoint& z, const OrbitPoint& w) {
  require_length(spec.m(), z.m(), "orbit_distance");
  require_length(spec.m(), w.m(), "orbit_distance");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(kGridSamples);
  auto distance_at = [&](double theta) { return max_norm_distance(rotate(spec, theta, z), w); };

  std::vector<std::pair<double, std::size_t>> grid(kGridSamples);
  for (std::size_t i = 0; i < kGridSamples; ++i) grid[i] = {distance_at(step * static_cast<double>(i)), i};
  const std::size_t keep = std::min(kRefinedCandidates, grid.size());
  std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(keep), grid.end());

  double best = grid.front().first;
  for (std::size_t c = 0; c < keep; ++c) {
    const double center = step * static_cast<double>(grid[c].second);
    double lo = center - step;
    double hi = center + step;
    for (int it = 0; it < kRefinements; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double probe = 1e-3 * (hi - lo);
      if (distance_at(mid - probe) <= distance_at(mid + probe)) {
        hi = mid + probe;
      } else {
        lo = mid - probe;
      }
    }
    best = std::min({best, distance_at(0.5 * (lo + hi)), distance_at(lo), distance_at(hi)});
  }
  return best;
}

bool same_orbit(const ActionSpec& spec, const OrbitPoint& z, const OrbitPoint& w, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::PreconditionViolation, "tolerance must be positive");
  return orbit_distance(spec, z, w) <= tol;
}

bool check_m2_membership(Weight alpha1, Weight alpha2, std::span<const double> y, double tol) {
  if (alpha1 <= 0 || alpha2 <= 0) throw Error(ErrorCode::PreconditionViolation, "weights must be positive");
  if (std::gcd(alpha1, alpha2) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + std::to_string(alpha1) + ", " + std::to_string(alpha2) + ") != 1");
  }
  require_length(4, y.size(), "check_m2_membership");
  if (y[0] < -tol || y[1] < -tol) return false;
  const double rhs = int_pow(y[0], alpha2) * int_pow(y[1], alpha1);
  const double scale = 1.0 + int_pow(std::abs(y[0]), alpha2) * int_pow(std::abs(y[1]), alpha1);
  return std::abs(y[2] * y[2] + y[3] * y[3] - rhs) <= tol * scale;
}

bool check_axes_image(const ActionSpec& spec, std::span<const InvariantGenerator> generators, std::size_t j,
                      double r) {
  if (j >= spec.m()) throw Error(ErrorCode::IndexOutOfRange, "axis " + std::to_string(j) + " >= m");
  if (!(r > 0.0)) throw Error(ErrorCode::PreconditionViolation, "axis point must have r > 0");
  std::vector<std::complex<double>> coords(spec.m());
  coords[j] = r;
  const auto image = evaluate_hilbert_map(generators, OrbitPoint(std::move(coords)));
  const std::size_t slot = modulus_slot(generators, j);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i == slot) {
      if (std::abs(image[i] - r * r) > kZeroTolerance * (1.0 + r * r)) return false;
    } else if (std::abs(image[i]) > kZeroTolerance) {
      return false;
    }
  }
  return true;
}

OrbitPoint sample_polydisc(std::size_t m, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_engine(seed, trial);
  std::vector<std::complex<double>> coords(m);
  for (auto& z : coords) {
    const double radius = std::sqrt(uniform(rng, 0.0, 1.0));
    z = std::polar(radius, uniform(rng, 0.0, 2.0 * std::numbers::pi));
  }
  return OrbitPoint(std::move(coords));
}

CheckReport check_invariance(const ActionSpec& spec, std::span<const InvariantGenerator> generators,
                             std::uint64_t seed, std::uint64_t trials) {
  CheckReport report{"invariance", seed, trials, 0, 0.0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto p = sample_polydisc(spec.m(), seed, t);
    auto rng = trial_engine(seed + 1, t);
    const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const auto before = evaluate_hilbert_map(generators, p);
    const auto after = evaluate_hilbert_map(generators, rotate(spec, theta, p));
    double diff = 0.0;
    for (std::size_t i = 0; i < before.size(); ++i) diff = std::max(diff, std::abs(after[i] - before[i]));
    const double err = diff / (1.0 + max_abs(before));
    report.max_err = std::max(report.max_err, err);
    if (err > kCheckTolerance) ++report.failures;
  }
  return report;
}

CheckReport check_homogeneity(const ActionSpec& spec, std::span<const InvariantGenerator> generators,
                              std::uint64_t seed, std::uint64_t trials) {
  CheckReport report{"homogeneity", seed, trials, 0, 0.0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto p = sample_polydisc(spec.m(), seed, t);
    auto rng = trial_engine(seed + 2, t);
    double scale = 0.0;
    while (scale == 0.0) scale = uniform(rng, 0.0, 4.0);
    const auto base = evaluate_hilbert_map(generators, p);
    const auto scaled = evaluate_hilbert_map(generators, p.scaled(scale));
    bool failed = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
      const double expected = std::pow(scale, static_cast<double>(generators[i].degree())) * base[i];
      const double err = std::abs(scaled[i] - expected) / (1.0 + std::abs(expected));
      report.max_err = std::max(report.max_err, err);
      failed = failed || err > kCheckTolerance;
    }
    if (failed) ++report.failures;
  }
  return report;
}

CheckReport check_separation(const ActionSpec& spec, std::span<const InvariantGenerator> generators,
                             std::uint64_t seed, std::uint64_t trials) {
  constexpr double kImageMatch = 1e-12;
  constexpr double kOrbitMatch = 1e-6;
  CheckReport report{"separation", seed, trials, 0, 0.0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto z = sample_polydisc(spec.m(), seed, t);
    auto rng = trial_engine(seed + 3, t);
    // Even trials pair z with a point on its orbit, odd trials with an
    // independent sample; the implication is checked either way.
    const auto w = (t % 2 == 0) ? rotate(spec, uniform(rng, 0.0, 2.0 * std::numbers::pi), z)
                                : sample_polydisc(spec.m(), seed + 4, t);
    const auto sz = evaluate_hilbert_map(generators, z);
    const auto sw = evaluate_hilbert_map(generators, w);
    double diff = 0.0;
    for (std::size_t i = 0; i < sz.size(); ++i) diff = std::max(diff, std::abs(sz[i] - sw[i]));
    if (diff > kImageMatch) continue;
    const double dist = orbit_distance(spec, z, w);
    report.max_err = std::max(report.max_err, dist);
    if (dist > kOrbitMatch) ++report.failures;
  }
  return report;
}

CheckReport check_m2_image(const ActionSpec& spec, std::span<const InvariantGenerator> generators,
                           std::uint64_t seed, std::uint64_t trials, double tol) {
  if (spec.m() != 2) throw Error(ErrorCode::PreconditionViolation, "relation check needs m = 2");
  const Weight a1 = spec.weights()[0];
  const Weight a2 = spec.weights()[1];
  CheckReport report{"m2_relation", seed, trials, 0, 0.0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto y = evaluate_hilbert_map(generators, sample_polydisc(2, seed, t));
    const double residual = std::abs(y[2] * y[2] + y[3] * y[3] - int_pow(y[0], a2) * int_pow(y[1], a1)) /
                            (1.0 + int_pow(std::abs(y[0]), a2) * int_pow(std::abs(y[1]), a1));
    report.max_err = std::max(report.max_err, residual);
    if (!check_m2_membership(a1, a2, y, tol)) ++report.failures;
  }
  return report;
}

CheckReport check_axes(const ActionSpec& spec, std::span<const InvariantGenerator> generators,
                       std::uint64_t seed, std::uint64_t trials) {
  CheckReport report{"axes_image", seed, trials, 0, 0.0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = trial_engine(seed + 5, t);
    const auto j = static_cast<std::size_t>(t % spec.m());
    double r = 0.0;
    while (r == 0.0) r = uniform(rng, 0.0, 2.0);
    if (!check_axes_image(spec, generators, j, r)) ++report.failures;
  }
  return report;
}

std::vector<CheckReport> run_numeric_suite(const ActionSpec& spec, std::uint64_t seed, std::uint64_t trials,
                                           double tol) {
  const auto basis = hilbert_basis(spec);
  const auto generators = realize_generators(basis);
  std::vector<CheckReport> reports;
  reports.push_back(check_invariance(spec, generators, seed, trials));
  reports.push_back(check_homogeneity(spec, generators, seed, trials));
  reports.push_back(check_separation(spec, generators, seed, trials));
  reports.push_back(check_axes(spec, generators, seed, trials));
  if (spec.m() == 2) reports.push_back(check_m2_image(spec, generators, seed, trials, tol));
  return reports;
}

}  // namespace circle_action
