#include "circle_action/recovery.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "circle_action/error.hpp"

namespace circle_action {

namespace {

struct Landmarks {
  std::size_t distinguished;
  std::size_t top;
};

Landmarks find_landmarks(const StratificationDiagram& diagram) {
  const auto& strata = diagram.strata();
  std::vector<std::size_t> distinguished;
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    (strata[i].is_distinguished() ? distinguished : finite).push_back(i);
  }
  if (distinguished.empty()) {
    throw Error(ErrorCode::NoDistinguishedStratum, "diagram has no stratum of infinite order");
  }
  if (distinguished.size() > 1) {
    throw Error(ErrorCode::MalformedDiagram, "diagram has more than one stratum of infinite order");
  }
  if (finite.empty()) {
    throw Error(ErrorCode::NoDistinguishedStratum, "diagram has no finite-order strata (m = 0)");
  }
  std::vector<std::size_t> maximal;
  for (std::size_t s : finite) {
    const bool covered = std::any_of(finite.begin(), finite.end(),
                                     [&](std::size_t t) { return diagram.strictly_precedes(s, t); });
    if (!covered) maximal.push_back(s);
  }
  if (maximal.size() != 1) {
    throw Error(ErrorCode::MalformedDiagram,
                "expected one top stratum, found " + std::to_string(maximal.size()) + " maximal strata");
  }
  return {distinguished.front(), maximal.front()};
}

}  // namespace

InferredDimensions infer_dimensions(const StratificationDiagram& diagram) {
  const auto [distinguished, top] = find_landmarks(diagram);
  const auto& strata = diagram.strata();
  const std::size_t n = strata[top].dim + 1;
  const std::size_t trivial_dim = strata[distinguished].dim;
  if (trivial_dim >= n) {
    throw Error(ErrorCode::MalformedDiagram, "distinguished stratum is not of smaller dimension than the top");
  }
  if ((n - trivial_dim) % 2 != 0) {
    throw Error(ErrorCode::ParityError, "n - trivial_dim = " + std::to_string(n - trivial_dim) + " is odd");
  }
  const std::size_t m = (n - trivial_dim) / 2;
  if (diagram.ambient_dim() != n) {
    throw Error(ErrorCode::MalformedDiagram, "ambient_dim " + std::to_string(diagram.ambient_dim()) +
                                                 " disagrees with top stratum dimension + 1 = " +
                                                 std::to_string(n));
  }
  return {n, trivial_dim, m};
}

Recovery recover(const StratificationDiagram& diagram) {
  const InferredDimensions dims = infer_dimensions(diagram);
  const std::size_t top = find_landmarks(diagram).top;
  const auto& strata = diagram.strata();

  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    if (!strata[i].is_distinguished()) finite.push_back(i);
  }
  for (std::size_t a : finite) {
    for (std::size_t b : finite) {
      if (a == b) continue;
      const Weight oa = strata[a].order.value();
      const Weight ob = strata[b].order.value();
      if (a < b && oa == ob) {
        throw Error(ErrorCode::MalformedDiagram,
                    "strata '" + strata[a].id + "' and '" + strata[b].id + "' share order " + std::to_string(oa));
      }
      if (diagram.strictly_precedes(a, b) && oa % ob != 0) {
        throw Error(ErrorCode::MalformedDiagram, "'" + strata[a].id + "' lies below '" + strata[b].id +
                                                     "' but its order is not a multiple");
      }
    }
  }

  std::vector<std::int64_t> vertices(strata.size(), 0);
  std::vector<std::size_t> depths(strata.size(), 0);
  for (std::size_t s : finite) {
    const std::size_t codim = strata[top].dim - strata[s].dim;
    if (codim % 2 != 0) {
      throw Error(ErrorCode::ParityError,
                  "stratum '" + strata[s].id + "' has odd codimension " + std::to_string(codim));
    }
    if (codim / 2 >= dims.m) {
      throw Error(ErrorCode::MalformedDiagram,
                  "stratum '" + strata[s].id + "' has codimension " + std::to_string(codim) +
                      ", leaving no simplex vertex");
    }
    vertices[s] = static_cast<std::int64_t>(dims.m - codim / 2);
    depths[s] = depth(diagram, s);
  }

  std::vector<std::size_t> order = finite;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return depths[a] > depths[b]; });

  std::vector<std::int64_t> own(strata.size(), 0);
  for (std::size_t s : order) {
    std::int64_t inherited = 0;
    for (std::size_t t : finite) {
      if (diagram.strictly_precedes(t, s)) inherited += own[t];
    }
    own[s] = vertices[s] - inherited;
    if (own[s] < 0) {
      throw Error(ErrorCode::NegativeMultiplicity,
                  "stratum '" + strata[s].id + "' spans " + std::to_string(vertices[s]) + " vertices but " +
                      std::to_string(inherited) + " are already owned below it");
    }
  }

  Recovery result;
  result.dims = dims;
  std::int64_t total = 0;
  for (std::size_t s : finite) {
    const Weight weight = strata[s].order.value();
    result.multiplicities.push_back({strata[s].id, weight, own[s]});
    result.weights.weights.insert(result.weights.weights.end(), static_cast<std::size_t>(own[s]), weight);
    total += own[s];
  }
  if (total != static_cast<std::int64_t>(dims.m)) {
    throw Error(ErrorCode::CountMismatch,
                "recovered " + std::to_string(total) + " weights, expected m = " + std::to_string(dims.m));
  }
  std::sort(result.weights.weights.begin(), result.weights.weights.end());
  const Weight g = std::accumulate(result.weights.weights.begin(), result.weights.weights.end(), Weight{0},
                                   [](Weight a, Weight b) { return std::gcd(a, b); });
  if (g != 1) {
    throw Error(ErrorCode::NotEffective, "recovered weights share the common factor " + std::to_string(g));
  }
  return result;
}

WeightMultiset recover_weights(const StratificationDiagram& diagram) { return recover(diagram).weights; }

bool roundtrip(const ActionSpec& spec) {
  const Recovery r = recover(orbit_strata(spec).abstract_copy());
  return r.dims.trivial_dim == spec.trivial_dim() && r.dims.m == spec.m() && r.dims.n == spec.n() &&
         std::equal(r.weights.weights.begin(), r.weights.weights.end(), spec.weights().begin(),
                    spec.weights().end());
}

ActionSpec random_effective_spec(std::uint64_t seed, std::size_t max_m, Weight max_weight,
                                 std::size_t max_trivial_dim) {
  if (max_m == 0 || max_weight <= 0) {
    throw Error(ErrorCode::PreconditionViolation, "max_m and max_weight must be positive");
  }
  std::mt19937_64 rng(seed);
  const auto m = std::uniform_int_distribution<std::size_t>(1, max_m)(rng);
  const auto trivial_dim = std::uniform_int_distribution<std::size_t>(0, max_trivial_dim)(rng);
  std::uniform_int_distribution<Weight> draw(1, max_weight);
  std::vector<Weight> weights(m);
  while (true) {
    Weight g = 0;
    for (auto& w : weights) {
      w = draw(rng);
      g = std::gcd(g, w);
    }
    if (g == 1) return ActionSpec::make(trivial_dim, weights);
  }
}

CheckReport roundtrip_campaign(std::uint64_t seed, std::uint64_t trials, std::size_t max_m, Weight max_weight,
                               std::size_t max_trivial_dim) {
  CheckReport report{"roundtrip", seed, trials, 0, 0.0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const ActionSpec spec = random_effective_spec(trial_seed(seed, t), max_m, max_weight, max_trivial_dim);
    bool ok = false;
    try {
      ok = roundtrip(spec);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) {
      ++report.failures;
      report.max_err = 1.0;
    }
  }
  return report;
}

}  // namespace circle_action
