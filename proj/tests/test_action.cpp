#include <doctest.h>

#include <numeric>
#include <random>

#include "circle_action/action.hpp"
#include "circle_action/error.hpp"

using namespace circle_action;

namespace {

std::vector<Weight> weights_of(const ActionSpec& s) { return {s.weights().begin(), s.weights().end()}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

// Stabilizer order by counting: the elements of the stabilizer are roots of
// unity whose order divides the first weight, so count k in [0, w_0) with
// w_j k = 0 (mod w_0) for every j in support.
Weight counted_stabilizer(std::span<const Weight> weights, std::span<const std::size_t> support) {
  const Weight base = weights[support.front()];
  Weight count = 0;
  for (Weight k = 0; k < base; ++k) {
    bool fixed = true;
    for (std::size_t j : support) fixed = fixed && (weights[j] * k) % base == 0;
    if (fixed) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("canonicalize folds zeros, drops signs and sorts") {
  const ActionSpec s = canonicalize({0, -1, 2}, 3);
  CHECK(s.trivial_dim() == 5);
  CHECK(weights_of(s) == std::vector<Weight>{1, 2});
  CHECK(s.m() == 2);
  CHECK(s.n() == 9);

  const ActionSpec t = canonicalize({1, 2, 3}, 0);
  CHECK(t.trivial_dim() == 0);
  CHECK(weights_of(t) == std::vector<Weight>{1, 2, 3});
  CHECK(t.n() == 6);

  CHECK(weights_of(canonicalize({6, -4, 9})) == std::vector<Weight>{4, 6, 9});
}

TEST_CASE("canonicalize rejects non-effective weights") {
  CHECK(code_of([] { canonicalize({2, 4}, 0); }) == ErrorCode::NotEffective);
  CHECK(code_of([] { canonicalize({0, -6, 3}, 0); }) == ErrorCode::NotEffective);
  CHECK(code_of([] { ActionSpec::make(0, {0, 1}); }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("purely trivial action is representable") {
  const ActionSpec s = canonicalize({0, 0}, 1);
  CHECK(s.m() == 0);
  CHECK(s.trivial_dim() == 5);
  CHECK(s.n() == 5);
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Weight> w(-12, 12);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Weight> raw(1 + trial % 6);
    for (auto& x : raw) x = w(rng);
    const std::size_t t = static_cast<std::size_t>(trial % 4);
    try {
      const ActionSpec once = canonicalize(raw, t);
      const ActionSpec twice = canonicalize(once.weights(), once.trivial_dim());
      CHECK(once == twice);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotEffective);
    }
  }
}

TEST_CASE("gcd_label of simplex faces") {
  const ActionSpec a = canonicalize({1, 2, 3});
  CHECK(gcd_label(a, IndexSet{0, 2}) == 1);

  const ActionSpec b = canonicalize({2, 2, 3, 4, 6});
  CHECK(gcd_label(b, IndexSet{2, 4}) == 3);
  CHECK(gcd_label(b, IndexSet{0, 1, 3, 4}) == 2);
  CHECK(gcd_label(b, IndexSet{0, 1, 2, 3, 4}) == 1);
  CHECK(code_of([&] { gcd_label(b, IndexSet{5}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("isotropy orders") {
  const ActionSpec s = canonicalize({3, 5});
  const std::vector<std::size_t> first{0};
  CHECK(isotropy_order(s, first).value() == 3);
  CHECK(isotropy_order(s, std::vector<std::size_t>{}).is_infinite());
  CHECK(isotropy_order(s, std::vector<std::size_t>{}).to_string() == "inf");

  const ActionSpec big = canonicalize({2, 2, 3, 4, 6});
  CHECK(isotropy_order(big, std::vector<std::size_t>{3}).value() == 4);
  CHECK(code_of([&] { isotropy_order(big, std::vector<std::size_t>{9}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("gcd properties against counting oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Weight> w(1, 20);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Weight> raw(1 + trial % 5);
    Weight g = 0;
    for (auto& x : raw) g = std::gcd(g, x = w(rng));
    if (g != 1) continue;
    const ActionSpec spec = canonicalize(raw);
    const std::size_t m = spec.m();
    for (std::uint64_t a = 1; a < (std::uint64_t{1} << m); ++a) {
      const IndexSet face_a = IndexSet::from_mask(a);
      const Weight label_a = gcd_label(spec, face_a);
      CHECK(isotropy_order(spec, face_a.indices()).value() == label_a);
      CHECK(counted_stabilizer(spec.weights(), face_a.indices()) == label_a);
      for (std::uint64_t b = a; b < (std::uint64_t{1} << m); b = (b + 1) | a) {
        // b ranges over supersets of a.
        CHECK(label_a % gcd_label(spec, IndexSet::from_mask(b)) == 0);
      }
    }
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), 0);
    CHECK(gcd_label(spec, IndexSet(all)) == 1);
  }
}

TEST_CASE("IndexSet labels and subsets") {
  CHECK(IndexSet{2, 0}.label() == "S_13");
  CHECK(IndexSet{0, 10}.label() == "S_1,11");
  CHECK(IndexSet{2}.is_subset_of(IndexSet{0, 2}));
  CHECK_FALSE(IndexSet{1}.is_subset_of(IndexSet{0, 2}));
  CHECK(code_of([] { IndexSet(std::vector<std::size_t>{}); }) == ErrorCode::PreconditionViolation);
}
