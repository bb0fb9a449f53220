#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "circle_action/error.hpp"
#include "circle_action/hilbert_numeric.hpp"
#include "circle_action/invariants.hpp"
#include "circle_action/recovery.hpp"
#include "circle_action/serialization.hpp"
#include "circle_action/stratification.hpp"

namespace circle_action::cli {

namespace {

// Actions exercised by `verify` when no --weights are given.
const std::vector<std::vector<Weight>> kDefaultVerifySpecs = {{1}, {1, 2}, {1, 2, 3}, {2, 3}, {2, 2, 3, 4, 6}};

ActionSpec spec_from(const CommandConfig& config) {
  if (!config.weights) throw Error(ErrorCode::PreconditionViolation, "--weights is required");
  return canonicalize(*config.weights, config.trivial_dim);
}

std::string join(std::span<const Weight> weights, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(weights[i]);
  }
  return out;
}

void print_report(const CheckReport& r, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << to_json(r).dump() << '\n';
  } else {
    out << r.check << ": trials " << r.trials << ", failures " << r.failures << ", max_err " << r.max_err
        << (r.failures == 0 ? "  ok" : "  FAILED") << '\n';
  }
}

int run_invariants(const CommandConfig& config, std::ostream& out) {
  const ActionSpec spec = spec_from(config);
  const auto generators = realize_generators(hilbert_basis(spec));
  if (config.format == Format::Json) {
    Json j;
    j["action"] = to_json(spec);
    Json list = Json::array();
    for (const auto& g : generators) list.push_back(to_json(g));
    j["generators"] = std::move(list);
    out << j.dump() << '\n';
  } else {
    for (const auto& g : generators) out << g.to_string() << '\n';
  }
  return kExitOk;
}

void write_dot(const StratificationDiagram& diagram, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << to_dot(diagram);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::PreconditionViolation, "cannot write '" + path + "'");
  file << to_dot(diagram);
}

int run_stratify(const CommandConfig& config, std::ostream& out) {
  const ActionSpec spec = spec_from(config);
  const StratificationDiagram diagram = orbit_strata(spec);
  if (config.format == Format::Json) {
    out << to_json(diagram).dump() << '\n';
  } else {
    out << "action on R^" << spec.trivial_dim() << " x C^" << spec.m() << " with weights "
        << join(spec.weights(), ",") << " (n = " << spec.n() << ")\n\n";
    out << "set\torder\tcodim\n";
    for (const auto& row : face_table(spec)) {
      out << row.indices.label() << '\t' << row.stabilizer_order << '\t' << row.codim << '\n';
    }
    out << "{0}\tinf\t" << 2 * spec.m() << "\n\nstratum\torder\tdim\tdepth\n";
    for (std::size_t i = 0; i < diagram.strata().size(); ++i) {
      const auto& s = diagram.strata()[i];
      out << s.id << '\t' << s.order.to_string() << '\t' << s.dim << '\t';
      if (s.is_distinguished()) {
        out << "-\n";
      } else {
        out << depth(diagram, i) << '\n';
      }
    }
    out << "\nhasse\n";
    for (const auto& [s, t] : hasse_edges(diagram)) {
      out << diagram.strata()[s].id << " -> " << diagram.strata()[t].id << '\n';
    }
  }
  if (config.dot_path) write_dot(diagram, *config.dot_path, out);
  return kExitOk;
}

int run_recover(const CommandConfig& config, std::ostream& out) {
  if (!config.diagram_path) throw Error(ErrorCode::PreconditionViolation, "--diagram is required");
  const Recovery r = recover(read_diagram(*config.diagram_path));
  if (config.format == Format::Json) {
    out << to_json(r).dump() << '\n';
  } else {
    out << "weights: " << join(r.weights.weights, ",") << '\n';
    out << "m: " << r.dims.m << "\nn: " << r.dims.n << "\ntrivial_dim: " << r.dims.trivial_dim << '\n';
    for (const auto& own : r.multiplicities) {
      out << own.id << " owns " << own.multiplicity << " x " << own.order << '\n';
    }
  }
  return kExitOk;
}

int run_roundtrip(const CommandConfig& config, std::ostream& out) {
  if (config.weights) {
    const ActionSpec spec = spec_from(config);
    const bool pass = roundtrip(spec);
    if (config.format == Format::Json) {
      Json j;
      j["action"] = to_json(spec);
      j["pass"] = pass;
      out << j.dump() << '\n';
    } else {
      out << (pass ? "pass" : "FAIL") << '\n';
    }
    return pass ? kExitOk : kExitVerificationFailed;
  }
  const CheckReport report =
      roundtrip_campaign(config.seed, config.trials, config.max_m, config.max_weight, config.max_trivial_dim);
  print_report(report, config.format, out);
  return report.failures == 0 ? kExitOk : kExitVerificationFailed;
}

int run_verify(const CommandConfig& config, std::ostream& out) {
  std::vector<ActionSpec> specs;
  if (config.weights) {
    specs.push_back(spec_from(config));
  } else {
    for (const auto& w : kDefaultVerifySpecs) specs.push_back(canonicalize(w, config.trivial_dim));
  }
  bool failed = false;
  for (const auto& spec : specs) {
    for (auto report : run_numeric_suite(spec, config.seed, config.trials, config.tol)) {
      if (specs.size() > 1) report.check += "[" + join(spec.weights(), ",") + "]";
      failed = failed || report.failures > 0;
      print_report(report, config.format, out);
    }
  }
  return failed ? kExitVerificationFailed : kExitOk;
}

}  // namespace

std::optional<CommandConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                        int& exit_code) {
  CLI::App app{"Invariants, orbit-type strata and weight recovery for linear circle actions"};
  app.require_subcommand(1);
  CommandConfig config;
  std::vector<Weight> weights;
  std::string format = "text";
  std::string diagram;
  std::string dot;

  auto add_weights = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--weights", weights, "comma-separated integer weights")->delimiter(',');
    if (required) opt->required();
    sub->add_option("--trivial-dim", config.trivial_dim, "dimension of the trivially acted factor");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* invariants = app.add_subcommand("invariants", "print the real invariant generators");
  add_weights(invariants, true);
  add_format(invariants);

  auto* stratify = app.add_subcommand("stratify", "print the face table and the stratification diagram");
  add_weights(stratify, true);
  add_format(stratify);
  stratify->add_option("--dot", dot, "write a Graphviz rendering of the Hasse diagram ('-' for stdout)");

  auto* recover_cmd = app.add_subcommand("recover", "recover the weights from a diagram JSON file");
  recover_cmd->add_option("--diagram", diagram, "diagram JSON file, '-' for stdin")->required();
  add_format(recover_cmd);

  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "check that recovery inverts stratification");
  add_weights(roundtrip_cmd, false);
  add_format(roundtrip_cmd);
  roundtrip_cmd->add_option("--seed", config.seed, "seed of the randomized campaign");
  roundtrip_cmd->add_option("--trials", config.trials, "number of random actions");
  roundtrip_cmd->add_option("--max-weight", config.max_weight, "largest random weight")->check(CLI::PositiveNumber);
  roundtrip_cmd->add_option("--max-m", config.max_m, "largest random m")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the numeric Hilbert-map checks");
  add_weights(verify, false);
  add_format(verify);
  verify->add_option("--seed", config.seed, "seed");
  verify->add_option("--trials", config.trials, "trials per check");
  verify->add_option("--tol", config.tol, "relation tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err);
    if (exit_code != 0) exit_code = kExitInputError;
    return std::nullopt;
  }

  const std::map<CLI::App*, Command> commands = {{invariants, Command::Invariants},
                                                 {stratify, Command::Stratify},
                                                 {recover_cmd, Command::Recover},
                                                 {roundtrip_cmd, Command::Roundtrip},
                                                 {verify, Command::Verify}};
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }
  if (!weights.empty()) config.weights = weights;
  if (!diagram.empty()) config.diagram_path = diagram;
  if (!dot.empty()) config.dot_path = dot;
  config.format = format == "json" ? Format::Json : Format::Text;
  return config;
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Invariants: return run_invariants(config, out);
      case Command::Stratify: return run_stratify(config, out);
      case Command::Recover: return run_recover(config, out);
      case Command::Roundtrip: return run_roundtrip(config, out);
      case Command::Verify: return run_verify(config, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace circle_action::cli
