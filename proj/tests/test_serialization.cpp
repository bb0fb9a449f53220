#include <doctest.h>

#include "circle_action/error.hpp"
#include "circle_action/serialization.hpp"

using namespace circle_action;

namespace {

ErrorCode parse_error_of(const char* text) {
  try {
    (void)diagram_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure");
  return ErrorCode::NotEffective;
}

}  // namespace

TEST_CASE("action spec JSON") {
  CHECK(to_json(canonicalize({0, -1, 2}, 3)).dump() == R"({"trivial_dim":5,"weights":[1,2]})");
  CHECK(action_from_json(Json::parse(R"({"trivial_dim":1,"weights":[3,-2]})")) == canonicalize({2, 3}, 1));
  try {
    (void)action_from_json(Json::parse(R"({"weights":[1]})"));
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("generator JSON") {
  const auto gens = realize_generators(hilbert_basis(canonicalize({1, 2})));
  CHECK(to_json(gens[0]).dump() == R"({"k":[1,0],"kbar":[1,0],"part":"abs2"})");
  CHECK(to_json(gens[2]).dump() == R"({"k":[2,0],"kbar":[0,1],"part":"re"})");
  CHECK(to_json(gens[3]).dump() == R"({"k":[2,0],"kbar":[0,1],"part":"im"})");
  for (const auto& g : gens) CHECK(generator_from_json(to_json(g)) == g);
  CHECK(exponent_from_json(Json::parse(R"({"k":[0,3],"kbar":[1,0]})")) == ExponentVector({0, 3}, {1, 0}));
}

TEST_CASE("diagram JSON layout") {
  const auto d = orbit_strata(canonicalize({1, 2, 3}));
  const Json j = to_json(d);
  CHECK(j.dump() ==
        R"({"ambient_dim":6,"strata":[{"id":"order:1","order":1,"dim":5},{"id":"order:2","order":2,"dim":1},)"
        R"({"id":"order:3","order":3,"dim":1},{"id":"distinguished","order":"inf","dim":0}],)"
        R"("closure":[["order:2","order:1"],["order:3","order:1"],["distinguished","order:1"],)"
        R"(["distinguished","order:2"],["distinguished","order:3"]]})");
}

TEST_CASE("diagram JSON survives a round trip byte for byte") {
  for (const auto& w : std::vector<std::vector<Weight>>{{1}, {1, 2, 3}, {2, 2, 3, 4, 6}, {6, 10, 15}}) {
    const Json once = to_json(orbit_strata(canonicalize(w, 1)));
    const Json twice = to_json(diagram_from_json(Json::parse(once.dump())));
    CHECK(once.dump() == twice.dump());
  }
}

TEST_CASE("diagram JSON errors") {
  CHECK(parse_error_of(R"({"strata":[],"closure":[]})") == ErrorCode::ParseError);
  CHECK(parse_error_of(R"({"ambient_dim":2,"strata":[{"id":"a","order":"big","dim":1}],"closure":[]})") ==
        ErrorCode::ParseError);
  CHECK(parse_error_of(R"({"ambient_dim":2,"strata":[{"id":"a","order":0,"dim":1}],"closure":[]})") ==
        ErrorCode::ParseError);
  CHECK(parse_error_of(R"({"ambient_dim":2,"strata":[{"id":"a","order":1,"dim":1}],"closure":[["a","b"]]})") ==
        ErrorCode::ParseError);
  CHECK(parse_error_of(R"({"ambient_dim":2,"strata":[{"id":"a","order":1,"dim":1},{"id":"a","order":2,"dim":0}],)"
                       R"("closure":[]})") == ErrorCode::MalformedDiagram);
}

TEST_CASE("recovery and report JSON") {
  const Recovery r = recover(orbit_strata(canonicalize({2, 2, 3, 4, 6})));
  CHECK(to_json(r).dump() == R"({"weights":[2,2,3,4,6],"trivial_dim":0,"m":5,"n":10})");
  const CheckReport report{"invariance", 3, 10, 0, 0.5};
  CHECK(to_json(report).dump() == R"({"check":"invariance","seed":3,"trials":10,"failures":0,"max_err":0.5})");
}

TEST_CASE("face JSON uses 1-based indices") {
  CHECK(to_json(FaceClass{IndexSet{2, 4}, 3, 6}).dump() == R"({"face":[3,5],"order":3,"codim":6})");
}
