#pragma once

#include <string>

#include <json.hpp>

#include "circle_action/action.hpp"
#include "circle_action/hilbert_numeric.hpp"
#include "circle_action/invariants.hpp"
#include "circle_action/recovery.hpp"
#include "circle_action/stratification.hpp"

namespace circle_action {

// Keys are emitted in a fixed documented order, hence ordered_json.
using Json = nlohmann::ordered_json;

Json to_json(const ActionSpec& spec);                // {"trivial_dim", "weights"}
Json to_json(const ExponentVector& e);               // {"k", "kbar"}
Json to_json(const InvariantGenerator& g);           // {"k", "kbar", "part": "abs2"|"re"|"im"}
Json to_json(const FaceClass& face);                 // {"face", "order", "codim"}, 1-based face indices
Json to_json(const StratificationDiagram& diagram);  // {"ambient_dim", "strata", "closure"}
Json to_json(const Recovery& recovery);              // {"weights", "trivial_dim", "m", "n"}
Json to_json(const CheckReport& report);             // {"check", "seed", "trials", "failures", "max_err"}

/// Parsers throw ParseError on schema violations; diagram_from_json also
/// propagates MalformedDiagram from the diagram constructor.
ActionSpec action_from_json(const Json& j);
ExponentVector exponent_from_json(const Json& j);
InvariantGenerator generator_from_json(const Json& j);
StratificationDiagram diagram_from_json(const Json& j);

/// Reads a diagram from a file, or from stdin when path is "-".
StratificationDiagram read_diagram(const std::string& path);

}  // namespace circle_action
