#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circle_action/action.hpp"

namespace circle_action {

/// One row of the S-set table: the coordinate subspace where exactly the
/// listed coordinates are non-zero.
struct FaceClass {
  IndexSet indices;
  Weight stabilizer_order;
  std::size_t codim;  // 2 (m - |indices|)

  friend bool operator==(const FaceClass&, const FaceClass&) = default;
};

/// One row per non-empty subset of {0..m-1}, largest subsets first, then
/// lexicographic. Throws EmptyAction for m = 0.
std::vector<FaceClass> face_table(const ActionSpec& spec);

struct Stratum {
  std::string id;
  IsotropyOrder order;
  std::size_t dim = 0;
  /// S-sets whose images make up the stratum; empty for the distinguished
  /// stratum and for diagrams read from the wire format.
  std::vector<IndexSet> faces;

  [[nodiscard]] bool is_distinguished() const noexcept { return order.is_infinite(); }
};

using StratumPair = std::pair<std::size_t, std::size_t>;

/// Orbit-type strata of an orbit space together with the closure order.
///
/// The order is stored as its strict part (pairs (s, t) with s below t),
/// transitively closed. Construction validates ids, indices, acyclicity and
/// that dim strictly increases along strict pairs; violations throw
/// MalformedDiagram. It does not check realizability.
class StratificationDiagram {
 public:
  StratificationDiagram(std::size_t ambient_dim, std::vector<Stratum> strata, std::vector<StratumPair> closure);

  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  [[nodiscard]] const std::vector<Stratum>& strata() const noexcept { return strata_; }
  [[nodiscard]] const std::vector<StratumPair>& closure() const noexcept { return closure_; }

  /// s strictly below t.
  [[nodiscard]] bool strictly_precedes(std::size_t s, std::size_t t) const;
  /// Reflexive closure order.
  [[nodiscard]] bool precedes(std::size_t s, std::size_t t) const { return s == t || strictly_precedes(s, t); }

  [[nodiscard]] std::optional<std::size_t> find(std::string_view id) const;
  /// Throws UnknownStratum.
  [[nodiscard]] std::size_t index_of(std::string_view id) const;
  [[nodiscard]] const Stratum& at(std::string_view id) const { return strata_[index_of(id)]; }

  /// Copy with face data removed.
  [[nodiscard]] StratificationDiagram abstract_copy() const;

 private:
  std::size_t ambient_dim_;
  std::vector<Stratum> strata_;
  std::vector<StratumPair> closure_;
  std::vector<std::vector<bool>> below_;
};

inline constexpr std::string_view kDistinguishedId = "distinguished";
std::string stratum_id(Weight order);

/// Groups the S-sets by stabilizer order. The stratum of order d has the
/// maximal face {j : d | w_j} and dimension trivial_dim + 2|face| - 1; the
/// stratum of order d lies below that of order e iff e divides d. The
/// distinguished stratum (origin times the trivial factor) lies below every
/// other one. Strata are listed by increasing order, distinguished last.
StratificationDiagram orbit_strata(const ActionSpec& spec);

/// Length of a longest strict chain from s up to a maximal finite stratum.
/// Throws DistinguishedStratum or UnknownStratum.
std::size_t depth(const StratificationDiagram& diagram, std::size_t s);
std::size_t depth(const StratificationDiagram& diagram, std::string_view id);

/// Covering pairs of the closure order among finite-order strata.
std::vector<StratumPair> hasse_edges(const StratificationDiagram& diagram);

/// Graphviz rendering: a node per stratum, an edge per Hasse pair.
std::string to_dot(const StratificationDiagram& diagram);

}  // namespace circle_action
