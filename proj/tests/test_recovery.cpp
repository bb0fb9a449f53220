#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "circle_action/error.hpp"
#include "circle_action/recovery.hpp"

using namespace circle_action;

namespace {

std::vector<Weight> weights_of(const ActionSpec& s) { return {s.weights().begin(), s.weights().end()}; }

std::map<std::string, std::int64_t> owned(const Recovery& r) {
  std::map<std::string, std::int64_t> out;
  for (const auto& m : r.multiplicities) out[m.id] = m.multiplicity;
  return out;
}

ErrorCode recover_error(const StratificationDiagram& d) {
  try {
    (void)recover(d);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected recovery to fail");
  return ErrorCode::ParseError;
}

// Same diagram with strata listed in another order (ids preserved).
StratificationDiagram permuted(const StratificationDiagram& d, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(d.strata().size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::size_t> where(perm.size());
  std::vector<Stratum> strata;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    where[perm[i]] = i;
    strata.push_back(d.strata()[perm[i]]);
  }
  std::vector<StratumPair> closure;
  for (const auto& [s, t] : d.closure()) closure.emplace_back(where[s], where[t]);
  return StratificationDiagram(d.ambient_dim(), std::move(strata), std::move(closure));
}

StratificationDiagram handmade(std::size_t ambient, std::vector<Stratum> strata,
                               std::vector<std::pair<std::string, std::string>> edges) {
  std::vector<StratumPair> closure;
  auto index = [&](const std::string& id) {
    return static_cast<std::size_t>(
        std::find_if(strata.begin(), strata.end(), [&](const Stratum& s) { return s.id == id; }) - strata.begin());
  };
  for (const auto& [a, b] : edges) closure.emplace_back(index(a), index(b));
  return StratificationDiagram(ambient, std::move(strata), std::move(closure));
}

Stratum finite(const char* id, Weight order, std::size_t dim) { return {id, IsotropyOrder(order), dim, {}}; }
Stratum origin(std::size_t dim) { return {"A", IsotropyOrder::infinite(), dim, {}}; }

}  // namespace

TEST_CASE("infer_dimensions") {
  CHECK(infer_dimensions(orbit_strata(canonicalize({1, 2, 3}))) == InferredDimensions{6, 0, 3});
  CHECK(infer_dimensions(orbit_strata(canonicalize({2, 2, 3, 4, 6}))) == InferredDimensions{10, 0, 5});
  CHECK(infer_dimensions(orbit_strata(canonicalize({1}, 2))) == InferredDimensions{4, 2, 1});
}

TEST_CASE("infer_dimensions errors") {
  const auto no_origin = handmade(2, {finite("O", 1, 1)}, {});
  CHECK(recover_error(no_origin) == ErrorCode::NoDistinguishedStratum);
  const auto only_origin = handmade(3, {origin(3)}, {});
  CHECK(recover_error(only_origin) == ErrorCode::NoDistinguishedStratum);
  const auto odd = handmade(3, {finite("O", 1, 2), origin(0)}, {{"A", "O"}});
  CHECK(recover_error(odd) == ErrorCode::ParityError);
  const auto two_tops = handmade(4, {finite("O", 1, 3), finite("P", 2, 3), origin(0)}, {{"A", "O"}, {"A", "P"}});
  CHECK(recover_error(two_tops) == ErrorCode::MalformedDiagram);
  const auto wrong_ambient = handmade(8, {finite("O", 1, 3), origin(0)}, {{"A", "O"}});
  CHECK(recover_error(wrong_ambient) == ErrorCode::MalformedDiagram);
}

TEST_CASE("recover the three-weight example") {
  const Recovery r = recover(orbit_strata(canonicalize({1, 2, 3})).abstract_copy());
  CHECK(r.weights.weights == std::vector<Weight>{1, 2, 3});
  CHECK(owned(r) == std::map<std::string, std::int64_t>{{"order:1", 1}, {"order:2", 1}, {"order:3", 1}});
}

TEST_CASE("recover the five-weight example") {
  const Recovery r = recover(orbit_strata(canonicalize({2, 2, 3, 4, 6})).abstract_copy());
  CHECK(r.weights.weights == std::vector<Weight>{2, 2, 3, 4, 6});
  CHECK(owned(r) == std::map<std::string, std::int64_t>{
                        {"order:1", 0}, {"order:2", 2}, {"order:3", 1}, {"order:4", 1}, {"order:6", 1}});
  CHECK(r.dims == InferredDimensions{10, 0, 5});
}

TEST_CASE("recover a single weight") {
  CHECK(recover_weights(orbit_strata(canonicalize({1}))).weights == std::vector<Weight>{1});
}

TEST_CASE("recovery rejects unrealizable diagrams") {
  const auto negative = handmade(6,
                                 {finite("O", 1, 5), finite("P", 2, 3), finite("R1", 4, 1), finite("R2", 6, 1),
                                  finite("R3", 8, 1), origin(0)},
                                 {{"P", "O"}, {"R1", "P"}, {"R2", "P"}, {"R3", "P"}, {"A", "R1"}, {"A", "R2"},
                                  {"A", "R3"}});
  CHECK(recover_error(negative) == ErrorCode::NegativeMultiplicity);
  try {
    (void)recover(negative);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("'P'") != std::string::npos);
  }

  const auto even = handmade(2, {finite("O", 2, 1), origin(0)}, {{"A", "O"}});
  CHECK(recover_error(even) == ErrorCode::NotEffective);

  const auto repeated = handmade(6, {finite("O", 1, 5), finite("P", 2, 1), finite("Q", 2, 1), origin(0)},
                                 {{"P", "O"}, {"Q", "O"}, {"A", "P"}, {"A", "Q"}});
  CHECK(recover_error(repeated) == ErrorCode::MalformedDiagram);

  const auto not_dividing = handmade(6, {finite("O", 1, 5), finite("P", 2, 3), finite("R", 3, 1), origin(0)},
                                     {{"P", "O"}, {"R", "P"}, {"A", "R"}});
  CHECK(recover_error(not_dividing) == ErrorCode::MalformedDiagram);

  const auto odd_codim = handmade(6, {finite("O", 1, 5), finite("P", 2, 2), origin(0)}, {{"P", "O"}, {"A", "P"}});
  CHECK(recover_error(odd_codim) == ErrorCode::ParityError);
}

TEST_CASE("roundtrip examples") {
  CHECK(roundtrip(canonicalize({1, 2, 3})));
  CHECK(roundtrip(canonicalize({2, 2, 3, 4, 6})));
  CHECK(roundtrip(canonicalize({7, 11, 13}, 4)));
}

TEST_CASE("recovery is independent of the listing order of strata") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const ActionSpec spec = random_effective_spec(trial_seed(31, static_cast<std::uint64_t>(trial)), 6, 30, 4);
    const auto d = orbit_strata(spec).abstract_copy();
    const Recovery base = recover(d);
    const Recovery shuffled = recover(permuted(d, rng));
    CHECK(base.weights == shuffled.weights);
    CHECK(owned(base) == owned(shuffled));
    std::int64_t total = 0;
    for (const auto& own : base.multiplicities) {
      CHECK(own.multiplicity >= 0);
      total += own.multiplicity;
    }
    CHECK(total == static_cast<std::int64_t>(spec.m()));
  }
}

TEST_CASE("recovery ignores the input order of weights") {
  std::mt19937_64 rng(5);
  std::vector<Weight> w{6, 10, 15, 4, 9, 1};
  const auto expected = recover_weights(orbit_strata(canonicalize(w)));
  for (int i = 0; i < 20; ++i) {
    std::shuffle(w.begin(), w.end(), rng);
    CHECK(recover_weights(orbit_strata(canonicalize(w))) == expected);
  }
  CHECK(expected.weights == std::vector<Weight>{1, 4, 6, 9, 10, 15});
}

TEST_CASE("random campaign is deterministic") {
  const auto a = roundtrip_campaign(77, 500, 6, 30, 4);
  const auto b = roundtrip_campaign(77, 500, 6, 30, 4);
  CHECK(a.failures == 0);
  CHECK(b.failures == 0);
  CHECK(random_effective_spec(9, 6, 30, 4) == random_effective_spec(9, 6, 30, 4));
}
