#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circle_action/action.hpp"

namespace circle_action {

using Exponent = std::uint32_t;

/// Exponents of the monomial z_1^{k_1} zbar_1^{kbar_1} ... z_m^{k_m} zbar_m^{kbar_m}.
///
/// Ordering is lexicographic on the concatenated tuple (k, kbar).
class ExponentVector {
 public:
  ExponentVector(std::vector<Exponent> holomorphic, std::vector<Exponent> antiholomorphic);

  static ExponentVector zero(std::size_t m);
  /// Exponents of |z_j|^2.
  static ExponentVector modulus_squared(std::size_t m, std::size_t j);

  [[nodiscard]] std::span<const Exponent> holomorphic() const noexcept { return k_; }
  [[nodiscard]] std::span<const Exponent> antiholomorphic() const noexcept { return kbar_; }
  [[nodiscard]] std::size_t m() const noexcept { return k_.size(); }
  [[nodiscard]] std::uint64_t degree() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_self_conjugate() const noexcept { return k_ == kbar_; }
  /// Complex conjugate monomial: holomorphic and antiholomorphic parts swapped.
  [[nodiscard]] ExponentVector swapped() const { return ExponentVector(kbar_, k_); }
  /// Componentwise <=.
  [[nodiscard]] bool divides(const ExponentVector& other) const noexcept;

  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector& operator-=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  /// Monomial text such as "z1^2 zbar2"; "1" for the constant.
  [[nodiscard]] std::string monomial_string() const;

 private:
  std::vector<Exponent> k_;
  std::vector<Exponent> kbar_;
};

enum class GeneratorPart { ModulusSquared, RealPart, ImaginaryPart };

/// A real invariant: |z_j|^2, or the real or imaginary part of an invariant
/// monomial.
struct InvariantGenerator {
  ExponentVector exponents;
  GeneratorPart part;

  [[nodiscard]] std::uint64_t degree() const noexcept { return exponents.degree(); }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const InvariantGenerator&, const InvariantGenerator&) = default;
};

/// Charge of a monomial under the action: sum_j w_j (k_j - kbar_j).
/// The monomial is invariant iff this is zero.
Weight circle_weight(const ActionSpec& spec, const ExponentVector& e);

bool is_invariant_exponent(const ActionSpec& spec, const ExponentVector& e);

/// One term P_K z^K of a complex polynomial.
struct PolynomialTerm {
  ExponentVector exponents;
  std::complex<double> coefficient;
};

/// A polynomial is invariant iff every term with non-zero coefficient has
/// charge zero.
bool is_invariant_polynomial(const ActionSpec& spec, std::span<const PolynomialTerm> terms);

/// Minimal generating set (Hilbert basis) of the monoid of invariant
/// exponent vectors.
///
/// Candidates are all invariant vectors in the box [0, max_weight]^{2m};
/// a candidate is kept iff no previously kept element of smaller degree
/// divides it. Output is sorted by degree, then lexicographically.
/// Throws EmptyAction for m = 0 and PreconditionViolation when the box has
/// more than 2^24 holomorphic points.
std::vector<ExponentVector> hilbert_basis(const ActionSpec& spec);

/// Real generators from a Hilbert basis: the |z_j|^2 in index order, then
/// for each conjugate pair the real and imaginary part of the representative
/// whose (k, kbar) tuple is lexicographically larger (e.g. z1^2 zbar2 rather
/// than zbar1^2 z2). Pairs are ordered by degree, then by representative,
/// descending.
std::vector<InvariantGenerator> realize_generators(std::span<const ExponentVector> basis);

/// Writes e as a sum of basis elements by exhaustive search. Returns the
/// summands (with repetition, sorted) or nullopt when none exists.
/// Throws NotInvariant if e is not invariant.
std::optional<std::vector<ExponentVector>> decompose(const ActionSpec& spec, const ExponentVector& e,
                                                     std::span<const ExponentVector> basis);

}  // namespace circle_action
