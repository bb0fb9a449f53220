#include <limits>

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circle_action/error.hpp"
#include "circle_action/hilbert_numeric.hpp"
#include "circle_action/invariants.hpp"
#include "circle_action/recovery.hpp"
#include "circle_action/serialization.hpp"
#include "circle_action/stratification.hpp"

namespace py = pybind11;
using namespace circle_action;

namespace {

OrbitPoint point_from(const std::vector<std::complex<double>>& coords) { return OrbitPoint(coords); }

std::vector<std::complex<double>> coords_of(const OrbitPoint& p) { return {p.coords().begin(), p.coords().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Invariants, orbit-type strata and weight recovery for linear circle actions";

  static py::exception<Error> error(m, "CircleActionError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<ActionSpec>(m, "ActionSpec")
      .def(py::init([](const std::vector<Weight>& weights, std::size_t trivial_dim) {
             return canonicalize(weights, trivial_dim);
           }),
           py::arg("weights"), py::arg("trivial_dim") = 0)
      .def_property_readonly("weights", [](const ActionSpec& s) {
        return std::vector<Weight>(s.weights().begin(), s.weights().end());
      })
      .def_property_readonly("trivial_dim", &ActionSpec::trivial_dim)
      .def_property_readonly("m", &ActionSpec::m)
      .def_property_readonly("n", &ActionSpec::n)
      .def("to_json", [](const ActionSpec& s) { return to_json(s).dump(); })
      .def(py::self == py::self)
      .def("__repr__", [](const ActionSpec& s) { return "ActionSpec(" + to_json(s).dump() + ")"; });

  m.def("gcd_label", [](const ActionSpec& s, const std::vector<std::size_t>& face) {
    return gcd_label(s, IndexSet(face));
  }, py::arg("spec"), py::arg("face"), "gcd of the weights at 0-based indices `face`");
  m.def("isotropy_order", [](const ActionSpec& s, const std::vector<std::size_t>& support) -> py::object {
    const IsotropyOrder order = isotropy_order(s, support);
    if (order.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
    return py::int_(order.value());
  }, py::arg("spec"), py::arg("support"));

  py::class_<ExponentVector>(m, "ExponentVector")
      .def(py::init<std::vector<Exponent>, std::vector<Exponent>>(), py::arg("k"), py::arg("kbar"))
      .def_property_readonly("k", [](const ExponentVector& e) {
        return std::vector<Exponent>(e.holomorphic().begin(), e.holomorphic().end());
      })
      .def_property_readonly("kbar", [](const ExponentVector& e) {
        return std::vector<Exponent>(e.antiholomorphic().begin(), e.antiholomorphic().end());
      })
      .def_property_readonly("degree", &ExponentVector::degree)
      .def("swapped", &ExponentVector::swapped)
      .def(py::self == py::self)
      .def("__hash__", [](const ExponentVector& e) { return py::hash(py::str(to_json(e).dump())); })
      .def("__repr__", [](const ExponentVector& e) { return "ExponentVector(" + to_json(e).dump() + ")"; });

  py::enum_<GeneratorPart>(m, "GeneratorPart")
      .value("ModulusSquared", GeneratorPart::ModulusSquared)
      .value("RealPart", GeneratorPart::RealPart)
      .value("ImaginaryPart", GeneratorPart::ImaginaryPart);

  py::class_<InvariantGenerator>(m, "InvariantGenerator")
      .def_readonly("exponents", &InvariantGenerator::exponents)
      .def_readonly("part", &InvariantGenerator::part)
      .def_property_readonly("degree", &InvariantGenerator::degree)
      .def("to_json", [](const InvariantGenerator& g) { return to_json(g).dump(); })
      .def("__str__", &InvariantGenerator::to_string)
      .def("__repr__", [](const InvariantGenerator& g) { return "InvariantGenerator(" + g.to_string() + ")"; });

  m.def("circle_weight", &circle_weight, py::arg("spec"), py::arg("e"));
  m.def("is_invariant_exponent", &is_invariant_exponent, py::arg("spec"), py::arg("e"));
  m.def("hilbert_basis", &hilbert_basis, py::arg("spec"));
  m.def("realize_generators", [](const std::vector<ExponentVector>& basis) { return realize_generators(basis); },
        py::arg("basis"));
  m.def("decompose", [](const ActionSpec& s, const ExponentVector& e, const std::vector<ExponentVector>& basis) {
    return decompose(s, e, basis);
  }, py::arg("spec"), py::arg("e"), py::arg("basis"));

  m.def("rotate", [](const ActionSpec& s, double theta, const std::vector<std::complex<double>>& p) {
    return coords_of(rotate(s, theta, point_from(p)));
  }, py::arg("spec"), py::arg("theta"), py::arg("point"));
  m.def("evaluate_hilbert_map",
        [](const std::vector<InvariantGenerator>& gens, const std::vector<std::complex<double>>& p) {
          return evaluate_hilbert_map(gens, point_from(p));
        },
        py::arg("generators"), py::arg("point"));
  m.def("same_orbit",
        [](const ActionSpec& s, const std::vector<std::complex<double>>& z, const std::vector<std::complex<double>>& w,
           double tol) { return same_orbit(s, point_from(z), point_from(w), tol); },
        py::arg("spec"), py::arg("z"), py::arg("w"), py::arg("tol") = 1e-9);
  m.def("check_m2_membership", [](Weight a1, Weight a2, const std::vector<double>& y, double tol) {
    return check_m2_membership(a1, a2, y, tol);
  }, py::arg("alpha1"), py::arg("alpha2"), py::arg("y"), py::arg("tol") = 1e-9);
  m.def("check_axes_image", [](const ActionSpec& s, const std::vector<InvariantGenerator>& gens, std::size_t j,
                               double r) { return check_axes_image(s, gens, j, r); },
        py::arg("spec"), py::arg("generators"), py::arg("j"), py::arg("r"));
  m.def("verify", [](const ActionSpec& s, std::uint64_t seed, std::uint64_t trials, double tol) {
    std::vector<std::string> lines;
    for (const auto& r : run_numeric_suite(s, seed, trials, tol)) lines.push_back(to_json(r).dump());
    return lines;
  }, py::arg("spec"), py::arg("seed") = 1, py::arg("trials") = 1000, py::arg("tol") = 1e-9,
        "Numeric checks as JSON lines");

  m.def("face_table", [](const ActionSpec& s) {
    std::vector<std::string> rows;
    for (const auto& f : face_table(s)) rows.push_back(to_json(f).dump());
    return rows;
  }, py::arg("spec"), "Face table rows as JSON strings (1-based indices)");

  py::class_<StratificationDiagram>(m, "StratificationDiagram")
      .def_property_readonly("ambient_dim", &StratificationDiagram::ambient_dim)
      .def_property_readonly("ids", [](const StratificationDiagram& d) {
        std::vector<std::string> ids;
        for (const auto& s : d.strata()) ids.push_back(s.id);
        return ids;
      })
      .def("depth", [](const StratificationDiagram& d, const std::string& id) { return depth(d, id); })
      .def("hasse_edges", [](const StratificationDiagram& d) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [s, t] : hasse_edges(d)) out.emplace_back(d.strata()[s].id, d.strata()[t].id);
        return out;
      })
      .def("to_json", [](const StratificationDiagram& d) { return to_json(d).dump(); })
      .def("to_dot", [](const StratificationDiagram& d) { return to_dot(d); })
      .def_static("from_json", [](const std::string& text) {
        try {
          return diagram_from_json(Json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
          throw Error(ErrorCode::ParseError, e.what());
        }
      });

  m.def("orbit_strata", &orbit_strata, py::arg("spec"));
  m.def("infer_dimensions", [](const StratificationDiagram& d) {
    const auto dims = infer_dimensions(d);
    return py::make_tuple(dims.n, dims.trivial_dim, dims.m);
  }, py::arg("diagram"), "(n, trivial_dim, m)");
  m.def("recover_weights", [](const StratificationDiagram& d) { return recover_weights(d).weights; },
        py::arg("diagram"));
  m.def("recover", [](const StratificationDiagram& d) { return to_json(recover(d)).dump(); }, py::arg("diagram"),
        "Recovery result as JSON");
  m.def("roundtrip", &roundtrip, py::arg("spec"));
}
