#include "circle_action/serialization.hpp"

#include <fstream>
#include <iostream>

#include "circle_action/error.hpp"

namespace circle_action {

namespace {

const char* part_name(GeneratorPart part) {
  switch (part) {
    case GeneratorPart::ModulusSquared: return "abs2";
    case GeneratorPart::RealPart: return "re";
    case GeneratorPart::ImaginaryPart: return "im";
  }
  return "";
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad ") + what + ": " + e.what());
  }
}

std::vector<Exponent> exponents_from(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<Exponent> out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0) {
      throw Error(ErrorCode::ParseError, std::string(what) + " entries must be non-negative integers");
    }
    out.push_back(static_cast<Exponent>(x.get<std::int64_t>()));
  }
  return out;
}

}  // namespace

Json to_json(const ActionSpec& spec) {
  Json j;
  j["trivial_dim"] = spec.trivial_dim();
  j["weights"] = std::vector<Weight>(spec.weights().begin(), spec.weights().end());
  return j;
}

Json to_json(const ExponentVector& e) {
  Json j;
  j["k"] = std::vector<Exponent>(e.holomorphic().begin(), e.holomorphic().end());
  j["kbar"] = std::vector<Exponent>(e.antiholomorphic().begin(), e.antiholomorphic().end());
  return j;
}

Json to_json(const InvariantGenerator& g) {
  Json j = to_json(g.exponents);
  j["part"] = part_name(g.part);
  return j;
}

Json to_json(const FaceClass& face) {
  Json j;
  Json indices = Json::array();
  for (std::size_t i : face.indices.indices()) indices.push_back(i + 1);
  j["face"] = std::move(indices);
  j["order"] = face.stabilizer_order;
  j["codim"] = face.codim;
  return j;
}

Json to_json(const StratificationDiagram& diagram) {
  Json j;
  j["ambient_dim"] = diagram.ambient_dim();
  Json strata = Json::array();
  for (const auto& s : diagram.strata()) {
    Json entry;
    entry["id"] = s.id;
    if (s.order.is_infinite()) {
      entry["order"] = "inf";
    } else {
      entry["order"] = s.order.value();
    }
    entry["dim"] = s.dim;
    strata.push_back(std::move(entry));
  }
  j["strata"] = std::move(strata);
  Json closure = Json::array();
  for (const auto& [s, t] : diagram.closure()) {
    closure.push_back(Json::array({diagram.strata()[s].id, diagram.strata()[t].id}));
  }
  j["closure"] = std::move(closure);
  return j;
}

Json to_json(const Recovery& recovery) {
  Json j;
  j["weights"] = recovery.weights.weights;
  j["trivial_dim"] = recovery.dims.trivial_dim;
  j["m"] = recovery.dims.m;
  j["n"] = recovery.dims.n;
  return j;
}

Json to_json(const CheckReport& report) {
  Json j;
  j["check"] = report.check;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["failures"] = report.failures;
  j["max_err"] = report.max_err;
  return j;
}

ActionSpec action_from_json(const Json& j) {
  const auto trivial = get_as<std::int64_t>(field(j, "trivial_dim"), "trivial_dim");
  if (trivial < 0) throw Error(ErrorCode::ParseError, "trivial_dim must be non-negative");
  const auto weights = get_as<std::vector<Weight>>(field(j, "weights"), "weights");
  return canonicalize(weights, static_cast<std::size_t>(trivial));
}

ExponentVector exponent_from_json(const Json& j) {
  return ExponentVector(exponents_from(field(j, "k"), "k"), exponents_from(field(j, "kbar"), "kbar"));
}

InvariantGenerator generator_from_json(const Json& j) {
  const auto part = get_as<std::string>(field(j, "part"), "part");
  GeneratorPart parsed{};
  if (part == "abs2") {
    parsed = GeneratorPart::ModulusSquared;
  } else if (part == "re") {
    parsed = GeneratorPart::RealPart;
  } else if (part == "im") {
    parsed = GeneratorPart::ImaginaryPart;
  } else {
    throw Error(ErrorCode::ParseError, "unknown generator part '" + part + "'");
  }
  return {exponent_from_json(j), parsed};
}

StratificationDiagram diagram_from_json(const Json& j) {
  const auto ambient = get_as<std::int64_t>(field(j, "ambient_dim"), "ambient_dim");
  if (ambient < 0) throw Error(ErrorCode::ParseError, "ambient_dim must be non-negative");

  const Json& strata_json = field(j, "strata");
  if (!strata_json.is_array()) throw Error(ErrorCode::ParseError, "strata must be an array");
  std::vector<Stratum> strata;
  for (const auto& entry : strata_json) {
    Stratum s{get_as<std::string>(field(entry, "id"), "stratum id"), IsotropyOrder::infinite(), 0, {}};
    const Json& order = field(entry, "order");
    if (order.is_string()) {
      if (order.get<std::string>() != "inf") throw Error(ErrorCode::ParseError, "order must be an integer or \"inf\"");
    } else {
      const auto value = get_as<std::int64_t>(order, "order");
      if (value <= 0) throw Error(ErrorCode::ParseError, "order of '" + s.id + "' must be positive");
      s.order = IsotropyOrder(value);
    }
    const auto dim = get_as<std::int64_t>(field(entry, "dim"), "dim");
    if (dim < 0) throw Error(ErrorCode::ParseError, "dim of '" + s.id + "' must be non-negative");
    s.dim = static_cast<std::size_t>(dim);
    strata.push_back(std::move(s));
  }

  auto index = [&strata](const std::string& id) {
    for (std::size_t i = 0; i < strata.size(); ++i) {
      if (strata[i].id == id) return i;
    }
    throw Error(ErrorCode::ParseError, "closure names unknown stratum '" + id + "'");
  };
  std::vector<StratumPair> closure;
  const Json& closure_json = field(j, "closure");
  if (!closure_json.is_array()) throw Error(ErrorCode::ParseError, "closure must be an array");
  for (const auto& pair : closure_json) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::ParseError, "closure entries must be [lower, upper] id pairs");
    }
    closure.emplace_back(index(get_as<std::string>(pair[0], "closure id")),
                         index(get_as<std::string>(pair[1], "closure id")));
  }
  return StratificationDiagram(static_cast<std::size_t>(ambient), std::move(strata), std::move(closure));
}

StratificationDiagram read_diagram(const std::string& path) {
  Json j;
  try {
    if (path == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
      j = Json::parse(in);
    }
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return diagram_from_json(j);
}

}  // namespace circle_action
