#include "circle_action/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "circle_action/error.hpp"

namespace circle_action {

namespace {

void require_length(const ActionSpec& spec, const ExponentVector& e) {
  if (e.m() != spec.m()) {
    throw Error(ErrorCode::LengthMismatch,
                "exponent vector has length " + std::to_string(e.m()) + ", action has m = " +
                    std::to_string(spec.m()));
  }
}

std::string power(const char* base, std::size_t j, Exponent exp) {
  std::string out = base + std::to_string(j + 1);
  if (exp > 1) out += "^" + std::to_string(exp);
  return out;
}

constexpr std::uint64_t kMaxBoxPoints = std::uint64_t{1} << 24;

}  // namespace

ExponentVector::ExponentVector(std::vector<Exponent> holomorphic, std::vector<Exponent> antiholomorphic)
    : k_(std::move(holomorphic)), kbar_(std::move(antiholomorphic)) {
  if (k_.size() != kbar_.size()) {
    throw Error(ErrorCode::LengthMismatch, "holomorphic and antiholomorphic exponents differ in length");
  }
}

ExponentVector ExponentVector::zero(std::size_t m) {
  return ExponentVector(std::vector<Exponent>(m, 0), std::vector<Exponent>(m, 0));
}

ExponentVector ExponentVector::modulus_squared(std::size_t m, std::size_t j) {
  if (j >= m) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(j) + " >= m");
  ExponentVector e = zero(m);
  e.k_[j] = 1;
  e.kbar_[j] = 1;
  return e;
}

std::uint64_t ExponentVector::degree() const noexcept {
  return std::accumulate(k_.begin(), k_.end(), std::uint64_t{0}) +
         std::accumulate(kbar_.begin(), kbar_.end(), std::uint64_t{0});
}

bool ExponentVector::is_zero() const noexcept {
  auto nz = [](Exponent x) { return x != 0; };
  return std::none_of(k_.begin(), k_.end(), nz) && std::none_of(kbar_.begin(), kbar_.end(), nz);
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  if (other.m() != m()) return false;
  for (std::size_t j = 0; j < m(); ++j) {
    if (k_[j] > other.k_[j] || kbar_[j] > other.kbar_[j]) return false;
  }
  return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (other.m() != m()) throw Error(ErrorCode::LengthMismatch, "cannot add exponent vectors of different length");
  for (std::size_t j = 0; j < m(); ++j) {
    k_[j] += other.k_[j];
    kbar_[j] += other.kbar_[j];
  }
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
  if (!other.divides(*this)) {
    throw Error(ErrorCode::PreconditionViolation, "subtraction would produce a negative exponent");
  }
  for (std::size_t j = 0; j < m(); ++j) {
    k_[j] -= other.k_[j];
    kbar_[j] -= other.kbar_[j];
  }
  return *this;
}

std::string ExponentVector::monomial_string() const {
  std::string out;
  auto append = [&out](std::string factor) {
    if (!out.empty()) out += ' ';
    out += factor;
  };
  for (std::size_t j = 0; j < m(); ++j) {
    if (k_[j] > 0) append(power("z", j, k_[j]));
  }
  for (std::size_t j = 0; j < m(); ++j) {
    if (kbar_[j] > 0) append(power("zbar", j, kbar_[j]));
  }
  return out.empty() ? "1" : out;
}

std::string InvariantGenerator::to_string() const {
  switch (part) {
    case GeneratorPart::ModulusSquared: {
      const auto k = exponents.holomorphic();
      const auto it = std::find(k.begin(), k.end(), Exponent{1});
      return "|z" + std::to_string(static_cast<std::size_t>(it - k.begin()) + 1) + "|^2";
    }
    case GeneratorPart::RealPart: return "Re(" + exponents.monomial_string() + ")";
    case GeneratorPart::ImaginaryPart: return "Im(" + exponents.monomial_string() + ")";
  }
  return {};
}

Weight circle_weight(const ActionSpec& spec, const ExponentVector& e) {
  require_length(spec, e);
  Weight charge = 0;
  for (std::size_t j = 0; j < spec.m(); ++j) {
    charge += spec.weights()[j] *
              (static_cast<Weight>(e.holomorphic()[j]) - static_cast<Weight>(e.antiholomorphic()[j]));
  }
  return charge;
}

bool is_invariant_exponent(const ActionSpec& spec, const ExponentVector& e) {
  return circle_weight(spec, e) == 0;
}

bool is_invariant_polynomial(const ActionSpec& spec, std::span<const PolynomialTerm> terms) {
  return std::all_of(terms.begin(), terms.end(), [&spec](const PolynomialTerm& t) {
    return t.coefficient == std::complex<double>{} || is_invariant_exponent(spec, t.exponents);
  });
}

std::vector<ExponentVector> hilbert_basis(const ActionSpec& spec) {
  const std::size_t m = spec.m();
  if (m == 0) throw Error(ErrorCode::EmptyAction, "the action has no weights");
  const auto bound = static_cast<Exponent>(spec.max_weight());

  std::uint64_t box_points = 1;
  for (std::size_t j = 0; j < m; ++j) {
    box_points *= std::uint64_t{bound} + 1;
    if (box_points > kMaxBoxPoints) {
      throw Error(ErrorCode::PreconditionViolation,
                  "enumeration box (max_weight+1)^m exceeds 2^24 points; action too large");
    }
  }

  // Bucket every half-vector in [0, bound]^m by its weighted sum; an exponent
  // vector (k, kbar) is invariant exactly when both halves share a bucket.
  std::map<Weight, std::vector<std::vector<Exponent>>> by_charge;
  std::vector<Exponent> half(m, 0);
  while (true) {
    Weight charge = 0;
    for (std::size_t j = 0; j < m; ++j) charge += spec.weights()[j] * static_cast<Weight>(half[j]);
    by_charge[charge].push_back(half);
    std::size_t j = 0;
    while (j < m && half[j] == bound) half[j++] = 0;
    if (j == m) break;
    ++half[j];
  }

  std::vector<ExponentVector> candidates;
  for (std::size_t j = 0; j < m; ++j) candidates.push_back(ExponentVector::modulus_squared(m, j));
  for (const auto& [charge, halves] : by_charge) {
    if (charge == 0) continue;
    for (const auto& k : halves) {
      for (const auto& kbar : halves) {
        // Shared support means |z_j|^2 divides the monomial.
        bool overlap = false;
        for (std::size_t j = 0; j < m && !overlap; ++j) overlap = k[j] > 0 && kbar[j] > 0;
        if (!overlap) candidates.emplace_back(k, kbar);
      }
    }
  }

  std::sort(candidates.begin(), candidates.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    return da != db ? da < db : a < b;
  });

  std::vector<ExponentVector> basis;
  for (auto& candidate : candidates) {
    const bool reducible = std::any_of(basis.begin(), basis.end(), [&candidate](const ExponentVector& b) {
      return b.degree() < candidate.degree() && b.divides(candidate);
    });
    if (!reducible) basis.push_back(std::move(candidate));
  }
  return basis;
}

std::vector<InvariantGenerator> realize_generators(std::span<const ExponentVector> basis) {
  std::vector<InvariantGenerator> moduli;
  std::vector<ExponentVector> representatives;
  for (const auto& e : basis) {
    if (e.is_self_conjugate()) {
      moduli.push_back({e, GeneratorPart::ModulusSquared});
    } else {
      const ExponentVector conj = e.swapped();
      if (conj < e) representatives.push_back(e);
    }
  }
  const auto modulus_index = [](const InvariantGenerator& g) {
    const auto k = g.exponents.holomorphic();
    return std::find_if(k.begin(), k.end(), [](Exponent x) { return x != 0; }) - k.begin();
  };
  std::sort(moduli.begin(), moduli.end(), [&](const InvariantGenerator& a, const InvariantGenerator& b) {
    return modulus_index(a) < modulus_index(b);
  });
  std::sort(representatives.begin(), representatives.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    return da != db ? da < db : b < a;
  });

  std::vector<InvariantGenerator> out = std::move(moduli);
  for (const auto& e : representatives) {
    out.push_back({e, GeneratorPart::RealPart});
    out.push_back({e, GeneratorPart::ImaginaryPart});
  }
  return out;
}

namespace {

bool decompose_into(const ExponentVector& remainder, std::span<const ExponentVector> basis,
                    std::set<ExponentVector>& dead_ends, std::vector<ExponentVector>& parts) {
  if (remainder.is_zero()) return true;
  if (dead_ends.contains(remainder)) return false;
  for (const auto& b : basis) {
    if (b.is_zero() || !b.divides(remainder)) continue;
    parts.push_back(b);
    if (decompose_into(remainder - b, basis, dead_ends, parts)) return true;
    parts.pop_back();
  }
  dead_ends.insert(remainder);
  return false;
}

}  // namespace

std::optional<std::vector<ExponentVector>> decompose(const ActionSpec& spec, const ExponentVector& e,
                                                     std::span<const ExponentVector> basis) {
  if (!is_invariant_exponent(spec, e)) {
    throw Error(ErrorCode::NotInvariant, "monomial " + e.monomial_string() + " is not invariant");
  }
  std::set<ExponentVector> dead_ends;
  std::vector<ExponentVector> parts;
  if (!decompose_into(e, basis, dead_ends, parts)) return std::nullopt;
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace circle_action
