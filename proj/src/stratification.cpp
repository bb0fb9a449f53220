#include "circle_action/stratification.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "circle_action/error.hpp"

namespace circle_action {

namespace {

constexpr std::size_t kMaxFaceTableM = 24;

void require_enumerable(const ActionSpec& spec) {
  if (spec.m() == 0) throw Error(ErrorCode::EmptyAction, "the action has no weights");
  if (spec.m() > kMaxFaceTableM) {
    throw Error(ErrorCode::PreconditionViolation,
                "face enumeration limited to m <= " + std::to_string(kMaxFaceTableM));
  }
}

}  // namespace

std::vector<FaceClass> face_table(const ActionSpec& spec) {
  require_enumerable(spec);
  const std::size_t m = spec.m();
  std::vector<FaceClass> table;
  table.reserve((std::size_t{1} << m) - 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    IndexSet face = IndexSet::from_mask(mask);
    const Weight order = gcd_label(spec, face);
    const std::size_t codim = 2 * (m - face.size());
    table.push_back({std::move(face), order, codim});
  }
  std::sort(table.begin(), table.end(), [](const FaceClass& a, const FaceClass& b) {
    if (a.indices.size() != b.indices.size()) return a.indices.size() > b.indices.size();
    return a.indices < b.indices;
  });
  return table;
}

StratificationDiagram::StratificationDiagram(std::size_t ambient_dim, std::vector<Stratum> strata,
                                             std::vector<StratumPair> closure)
    : ambient_dim_(ambient_dim), strata_(std::move(strata)) {
  const std::size_t count = strata_.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (strata_[i].id.empty()) throw Error(ErrorCode::MalformedDiagram, "stratum with empty id");
    for (std::size_t k = 0; k < i; ++k) {
      if (strata_[k].id == strata_[i].id) {
        throw Error(ErrorCode::MalformedDiagram, "duplicate stratum id '" + strata_[i].id + "'");
      }
    }
  }

  below_.assign(count, std::vector<bool>(count, false));
  for (const auto& [s, t] : closure) {
    if (s >= count || t >= count) throw Error(ErrorCode::MalformedDiagram, "closure pair names no stratum");
    if (s != t) below_[s][t] = true;
  }
  // Warshall transitive closure.
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!below_[i][k]) continue;
      for (std::size_t j = 0; j < count; ++j) {
        if (below_[k][j]) below_[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (below_[i][i]) {
      throw Error(ErrorCode::MalformedDiagram, "closure order has a cycle through '" + strata_[i].id + "'");
    }
    for (std::size_t j = 0; j < count; ++j) {
      if (!below_[i][j]) continue;
      if (strata_[i].dim >= strata_[j].dim) {
        throw Error(ErrorCode::MalformedDiagram, "'" + strata_[i].id + "' lies below '" + strata_[j].id +
                                                     "' but is not of smaller dimension");
      }
      closure_.emplace_back(i, j);
    }
  }
}

bool StratificationDiagram::strictly_precedes(std::size_t s, std::size_t t) const {
  if (s >= strata_.size() || t >= strata_.size()) {
    throw Error(ErrorCode::UnknownStratum, "stratum index out of range");
  }
  return below_[s][t];
}

std::optional<std::size_t> StratificationDiagram::find(std::string_view id) const {
  for (std::size_t i = 0; i < strata_.size(); ++i) {
    if (strata_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t StratificationDiagram::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorCode::UnknownStratum, "no stratum '" + std::string(id) + "'");
}

StratificationDiagram StratificationDiagram::abstract_copy() const {
  std::vector<Stratum> strata = strata_;
  for (auto& s : strata) s.faces.clear();
  return StratificationDiagram(ambient_dim_, std::move(strata), closure_);
}

std::string stratum_id(Weight order) { return "order:" + std::to_string(order); }

StratificationDiagram orbit_strata(const ActionSpec& spec) {
  require_enumerable(spec);
  const std::size_t m = spec.m();

  std::map<Weight, std::vector<IndexSet>> by_order;
  for (auto& row : face_table(spec)) by_order[row.stabilizer_order].push_back(std::move(row.indices));

  std::vector<Stratum> strata;
  for (auto& [order, faces] : by_order) {
    std::vector<std::size_t> maximal;
    for (std::size_t j = 0; j < m; ++j) {
      if (spec.weights()[j] % order == 0) maximal.push_back(j);
    }
    const IndexSet top_face(std::move(maximal));
    // gcd arithmetic guarantees this; a failure here means a grouping bug.
    if (gcd_label(spec, top_face) != order ||
        !std::all_of(faces.begin(), faces.end(), [&](const IndexSet& f) { return f.is_subset_of(top_face); })) {
      throw std::logic_error("stratum of order " + std::to_string(order) + " has no unique maximal face");
    }
    Stratum s{stratum_id(order), IsotropyOrder(order), spec.trivial_dim() + 2 * top_face.size() - 1,
              std::move(faces)};
    strata.push_back(std::move(s));
  }
  strata.push_back({std::string(kDistinguishedId), IsotropyOrder::infinite(), spec.trivial_dim(), {}});

  std::vector<StratumPair> closure;
  const std::size_t distinguished = strata.size() - 1;
  for (std::size_t s = 0; s < distinguished; ++s) {
    closure.emplace_back(distinguished, s);
    for (std::size_t t = 0; t < distinguished; ++t) {
      const Weight ds = strata[s].order.value();
      const Weight dt = strata[t].order.value();
      if (s != t && ds % dt == 0) closure.emplace_back(s, t);
    }
  }
  return StratificationDiagram(spec.n(), std::move(strata), std::move(closure));
}

std::size_t depth(const StratificationDiagram& diagram, std::size_t s) {
  const auto& strata = diagram.strata();
  if (s >= strata.size()) throw Error(ErrorCode::UnknownStratum, "stratum index out of range");
  if (strata[s].is_distinguished()) {
    throw Error(ErrorCode::DistinguishedStratum, "depth is undefined for '" + strata[s].id + "'");
  }
  // Strict pairs increase dimension, so visiting by decreasing dimension
  // sees every stratum above s before s itself.
  std::vector<std::size_t> order(strata.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return strata[a].dim > strata[b].dim; });
  std::vector<std::size_t> longest(strata.size(), 0);
  for (std::size_t a : order) {
    if (strata[a].is_distinguished()) continue;
    for (std::size_t b = 0; b < strata.size(); ++b) {
      if (!strata[b].is_distinguished() && diagram.strictly_precedes(a, b)) {
        longest[a] = std::max(longest[a], longest[b] + 1);
      }
    }
  }
  return longest[s];
}

std::size_t depth(const StratificationDiagram& diagram, std::string_view id) {
  return depth(diagram, diagram.index_of(id));
}

std::vector<StratumPair> hasse_edges(const StratificationDiagram& diagram) {
  const auto& strata = diagram.strata();
  std::vector<StratumPair> edges;
  for (const auto& [s, t] : diagram.closure()) {
    if (strata[s].is_distinguished() || strata[t].is_distinguished()) continue;
    bool covered = true;
    for (std::size_t u = 0; u < strata.size() && covered; ++u) {
      covered = !(diagram.strictly_precedes(s, u) && diagram.strictly_precedes(u, t));
    }
    if (covered) edges.emplace_back(s, t);
  }
  return edges;
}

std::string to_dot(const StratificationDiagram& diagram) {
  std::ostringstream out;
  out << "digraph strata {\n  rankdir=BT;\n";
  for (const auto& s : diagram.strata()) {
    out << "  \"" << s.id << "\" [label=\"" << s.id << " (order " << s.order.to_string() << ", dim " << s.dim
        << ")\"];\n";
  }
  for (const auto& [s, t] : hasse_edges(diagram)) {
    out << "  \"" << diagram.strata()[s].id << "\" -> \"" << diagram.strata()[t].id << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace circle_action
