// Copyright 2026 The weylqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weylqubit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "weylqubit/gns.hpp"
#include "weylqubit/optics.hpp"
#include "weylqubit/qubit.hpp"
#include "weylqubit/qudit.hpp"
#include "weylqubit/serialize.hpp"

namespace weylqubit {

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

int samples_or(const RunConfig& c, int def) { return c.samples >= 0 ? c.samples : def; }

Report run_extract(const RunConfig& c) {
  if (c.element_path.empty()) throw std::invalid_argument("extract: --element is required");
  const AlgebraElement a = element_from_file(c.element_path);
  const ExtractionTree t = extract_qubits(a, c.n);
  Report rep("extract n=" + std::to_string(c.n));
  rep.add_exact("recombination", equals(recombine(t), a));
  nlohmann::json blocks = nlohmann::json::array(), pre = nlohmann::json::array();
  for (size_t r = 0; r < t.blocks.size(); ++r) {
    nlohmann::json br = nlohmann::json::array(), pr = nlohmann::json::array();
    for (size_t k = 0; k < t.blocks[r].size(); ++k) {
      br.push_back(element_to_json(t.blocks[r][k]));
      pr.push_back(element_to_json(t.preimage[r][k]));
    }
    blocks.push_back(br);
    pre.push_back(pr);
  }
  rep.extra() = {{"depth", t.depth}, {"blocks", blocks}, {"preimage", pre}};
  return rep;
}

Report run_optics(const RunConfig& c) {
  if (c.subcommand == "verify") {
    GateOptions opt;
    opt.phi = c.phi;
    opt.l_max = c.l_max;
    opt.strict_mirrors = c.strict_mirrors;
    if (c.gate.empty()) return optics_suite(c.l_max, c.strict_mirrors);
    return verify_gate(c.gate, opt).to_report(std::max(c.tolerance, 1e-10));
  }
  if (c.subcommand == "simulate") {
    if (c.circuit_path.empty() || c.input_path.empty()) {
      throw std::invalid_argument("optics simulate: --circuit and --input are required");
    }
    OpticalCircuit circ;
    try {
      circ = circuit_from_json(read_json(c.circuit_path));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(c.circuit_path + ": " + e.what());
    }
    nlohmann::json result;
    try {
      result = simulate(circ, read_json(c.input_path));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(c.input_path + ": " + e.what());
    }
    Report rep("simulate");
    const double in = result["norm_in"].get<double>(), out = result["norm_out"].get<double>();
    rep.add_float("norm_preserved", std::abs(in - out), std::max(c.tolerance, 1e-10));
    rep.extra() = result;
    return rep;
  }
  throw std::invalid_argument("optics: expected 'verify' or 'simulate'");
}

Report dispatch(const RunConfig& c) {
  const std::string& cmd = c.command;
  if (cmd == "verify-pauli") return verify_pauli(c.l_max, c.tolerance, c.margin.value_or(-1));
  if (cmd == "verify-commutant") {
    Report rep = verify_commutant(samples_or(c, 50), c.seed, c.l_max, c.tolerance, c.margin.value_or(-1));
    for (const Rational& t : {Rational(1, 2), Rational(2, 3), Rational(1, 3), Rational(0), Rational(1)}) {
      rep.merge(commutant_ratio_check(t, c.l_max, std::max(c.tolerance, 1e-10)), "ratio(" + t.str() + ").");
    }
    return rep;
  }
  if (cmd == "verify-factor") {
    FactorOptions opt;
    if (c.l_max_explicit) opt.l_max = c.l_max;
    Report rep = factor_check(opt);
    rep.merge(structure_predicates(samples_or(c, 50), c.seed), "predicate.");
    return rep;
  }
  if (cmd == "verify-tensor") {
    Report rep = verify_tensor(samples_or(c, 100), c.seed);
    rep.merge(verify_extraction(20, c.seed + 1));
    return rep;
  }
  if (cmd == "extract") return run_extract(c);
  if (cmd == "gns") {
    if (c.state_path.empty()) throw std::invalid_argument("gns: --state is required");
    return verify_gns(state_from_file(c.state_path), c.tolerance);
  }
  if (cmd == "qudit") return verify_qudit(c.d, c.l_max, c.tolerance);
  if (cmd == "optics") return run_optics(c);
  throw std::invalid_argument("unknown command '" + cmd + "'");
}

}  // namespace

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl algebra qubit extraction and OAM optics verifier", "weylqubit_cli"};
  app.fallthrough();
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "text";
  CLI::Option* lmax_opt = app.add_option("--l-max", c.l_max, "OAM window half-width (default 32 or $WEYLQUBIT_L_MAX)");
  app.add_option("--margin", c.margin, "interior margin for oracle comparisons (default: bandwidth + 1)");
  app.add_option("--tolerance", c.tolerance, "numeric tolerance")->capture_default_str();
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", c.output_path, "write the report to a file");
  app.add_option("--samples", c.samples, "random samples for property suites");
  app.add_option("--seed", c.seed, "random seed")->capture_default_str();

  app.add_subcommand("verify-pauli", "Pauli relations of the qubit generators");
  app.add_subcommand("verify-commutant", "commutant generators and coefficient ratio");
  app.add_subcommand("verify-factor", "center argument, joint commutant and structure predicates");
  app.add_subcommand("verify-tensor", "split/recombine round trips and iterated extraction");
  CLI::App* ex = app.add_subcommand("extract", "iterated qubit extraction of an element");
  ex->add_option("--n", c.n, "number of qubits to extract")->required()->check(CLI::Range(1, 4));
  ex->add_option("--element", c.element_path, "element JSON file")->required();
  CLI::App* g = app.add_subcommand("gns", "GNS construction for a reference or density state");
  g->add_option("--state", c.state_path, "state JSON file")->required();
  CLI::App* q = app.add_subcommand("qudit", "qudit projectors and matrix units");
  q->add_option("--d", c.d, "qudit dimension")->required()->check(CLI::Range(2, 64));
  CLI::App* op = app.add_subcommand("optics", "OAM optics circuits");
  op->require_subcommand(1);
  CLI::App* ov = op->add_subcommand("verify", "verify a logical gate (all gates if --gate is omitted)");
  ov->add_option("--gate", c.gate, "phase, not, hadamard, controlled_z or pol_to_oam")
      ->check(CLI::IsMember({"phase", "not", "hadamard", "controlled_z", "pol_to_oam"}));
  ov->add_option("--phi", c.phi, "phase gate angle in radians");
  ov->add_flag("--strict-mirrors", c.strict_mirrors, "pair every Dove prism with an explicit mirror");
  CLI::App* os = op->add_subcommand("simulate", "propagate a state through a circuit file");
  os->add_option("--circuit", c.circuit_path, "circuit JSON file")->required();
  os->add_option("--input", c.input_path, "input state JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitPass : kExitUsage};
  }
  for (CLI::App* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    for (CLI::App* s2 : sub->get_subcommands()) c.subcommand = s2->get_name();
  }
  c.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  c.l_max_explicit = lmax_opt->count() > 0;
  if (!c.l_max_explicit) {
    if (const char* env = std::getenv(kLMaxEnv)) {
      try {
        c.l_max = std::stoll(env);
      } catch (const std::exception&) {
        err << "error: " << kLMaxEnv << "='" << env << "' is not an integer\n";
        return {std::nullopt, kExitUsage};
      }
      c.l_max_explicit = true;
    }
  }
  if (c.l_max < 8) {
    err << "error: l_max must be >= 8 (got " << c.l_max << ")\n";
    return {std::nullopt, kExitUsage};
  }
  if (c.margin && (*c.margin < 0 || *c.margin >= c.l_max)) {
    err << "error: margin must lie in [0, l_max)\n";
    return {std::nullopt, kExitUsage};
  }
  if (!(c.tolerance > 0)) {
    err << "error: tolerance must be positive\n";
    return {std::nullopt, kExitUsage};
  }
  return {c, kExitPass};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Report rep;
  try {
    rep = dispatch(cfg);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string text;
  if (cfg.format == OutputFormat::kJson) {
    text = rep.to_json().dump(2) + "\n";
  } else {
    text = rep.to_text();
  }
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output_path);
    if (!f) {
      err << "error: cannot write '" << cfg.output_path << "'\n";
      return kExitUsage;
    }
    f << text;
  }
  return rep.all_pass() ? kExitPass : kExitFail;
}

}  // namespace weylqubit
