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

#include "weylqubit/optics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace weylqubit {

namespace {

using cd = std::complex<double>;
using Mat2 = std::array<std::array<cd, 2>, 2>;

constexpr double kPi = std::numbers::pi;
const cd kI(0.0, 1.0);
const double kRt2 = std::sqrt(0.5);

// circular polarizations in the (H, V) basis
const std::array<cd, 2> kR = {kRt2, -kI * kRt2};
const std::array<cd, 2> kL = {kRt2, kI * kRt2};

Mat2 hwp_matrix(double th) {
  const double c = std::cos(2 * th), s = std::sin(2 * th);
  return {{{c, s}, {s, -c}}};
}

Mat2 qwp_matrix(double th) {
  const double c = std::cos(th), s = std::sin(th);
  return {{{c * c + kI * s * s, (1.0 - kI) * s * c}, {(1.0 - kI) * s * c, s * s + kI * c * c}}};
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void need_path(const ModeSpace& s, int p, const std::string& what) {
  if (p < 0 || p >= s.n_paths) {
    throw ConfigurationError(what + ": path " + std::to_string(p) + " not in a " + std::to_string(s.n_paths) +
                             "-path space");
  }
}

}  // namespace

Eigen::Index ModeSpace::index(int path, int pol, int64_t ell) const {
  return (static_cast<Eigen::Index>(path) * pol_dim() + pol) * oam.dim() + oam.index(ell);
}

// ---------------------------------------------------------------------------
// components

Component Component::beam_splitter(int a, int b, double t) {
  return {ComponentKind::kBeamSplitter, a, b, t, 0, false};
}
Component Component::phase_shifter(int p, double phi) { return {ComponentKind::kPhaseShifter, p, p, phi, 0, false}; }
Component Component::mirror(int p) { return {ComponentKind::kMirror, p, p, 0.0, 0, false}; }
Component Component::hologram(int p, int64_t q) { return {ComponentKind::kHologram, p, p, 0.0, q, false}; }
Component Component::dove_prism(int p, double alpha, bool flip) {
  return {ComponentKind::kDovePrism, p, p, alpha, 0, flip};
}
Component Component::pbs(int a, int b) { return {ComponentKind::kPBS, a, b, 0.0, 0, false}; }
Component Component::hwp(int p, double angle) { return {ComponentKind::kHWP, p, p, angle, 0, false}; }
Component Component::qwp(int p, double angle) { return {ComponentKind::kQWP, p, p, angle, 0, false}; }
Component Component::qplate(int p, int64_t twice_q) { return {ComponentKind::kQPlate, p, p, 0.0, twice_q, false}; }

std::string Component::label() const {
  const std::string p = std::to_string(path);
  switch (kind) {
    case ComponentKind::kBeamSplitter: return "BS(" + p + "," + std::to_string(path2) + ";t=" + fmt(value) + ")";
    case ComponentKind::kPhaseShifter: return "PS(" + p + ";" + fmt(value) + ")";
    case ComponentKind::kMirror: return "Mirror(" + p + ")";
    case ComponentKind::kHologram: return "Hg(" + p + ";" + std::to_string(shift) + ")";
    case ComponentKind::kDovePrism: return "DP(" + p + ";" + fmt(value) + (sign_flip ? ";flip)" : ")");
    case ComponentKind::kPBS: return "PBS(" + p + "," + std::to_string(path2) + ")";
    case ComponentKind::kHWP: return "HWP(" + p + ";" + fmt(value) + ")";
    case ComponentKind::kQWP: return "QWP(" + p + ";" + fmt(value) + ")";
    case ComponentKind::kQPlate: return "QP(" + p + ";" + std::to_string(shift) + "/2)";
  }
  return "?";
}

int64_t OpticalCircuit::oam_bandwidth() const {
  int64_t b = 0;
  for (const auto& c : stages) {
    if (c.kind == ComponentKind::kHologram || c.kind == ComponentKind::kQPlate) b += std::abs(c.shift);
  }
  return b;
}

void validate(const Component& c, const ModeSpace& s) {
  const std::string what = c.label();
  need_path(s, c.path, what);
  switch (c.kind) {
    case ComponentKind::kBeamSplitter:
    case ComponentKind::kPBS:
      need_path(s, c.path2, what);
      if (c.path == c.path2) throw ConfigurationError(what + ": needs two distinct paths");
      if (c.kind == ComponentKind::kBeamSplitter && (c.value < 0.0 || c.value > 1.0)) {
        throw ConfigurationError(what + ": transmission amplitude outside [0, 1]");
      }
      if (c.kind == ComponentKind::kPBS && !s.polarization) throw ConfigurationError(what + ": space has no polarization");
      break;
    case ComponentKind::kHWP:
    case ComponentKind::kQWP:
    case ComponentKind::kQPlate:
      if (!s.polarization) throw ConfigurationError(what + ": space has no polarization");
      break;
    default:
      break;
  }
}

SparseOp component_sparse(const Component& c, const ModeSpace& s) {
  validate(c, s);
  std::vector<Eigen::Triplet<cd>> trip;
  const int np = s.pol_dim();
  const int64_t lm = s.oam.l_max;
  auto put = [&](int path, int pol, int64_t ell, Eigen::Index col, cd v) {
    if (v == cd(0.0) || !s.oam.contains(ell)) return;  // hard truncation
    trip.emplace_back(s.index(path, pol, ell), col, v);
  };
  for (int p = 0; p < s.n_paths; ++p) {
    for (int a = 0; a < np; ++a) {
      for (int64_t l = -lm; l <= lm; ++l) {
        const Eigen::Index col = s.index(p, a, l);
        const bool on = p == c.path || ((c.kind == ComponentKind::kBeamSplitter || c.kind == ComponentKind::kPBS) &&
                                        p == c.path2);
        if (!on) {
          put(p, a, l, col, 1.0);
          continue;
        }
        switch (c.kind) {
          case ComponentKind::kBeamSplitter: {
            const double t = c.value, r = std::sqrt(std::max(0.0, 1.0 - t * t));
            const int other = p == c.path ? c.path2 : c.path;
            put(p, a, l, col, t);
            put(other, a, l, col, kI * r);
            break;
          }
          case ComponentKind::kPhaseShifter: put(p, a, l, col, std::polar(1.0, c.value)); break;
          case ComponentKind::kMirror: put(p, a, -l, col, 1.0); break;
          case ComponentKind::kHologram: put(p, a, l + c.shift, col, 1.0); break;
          case ComponentKind::kDovePrism: {
            const int64_t lo = c.sign_flip ? -l : l;
            put(p, a, lo, col, std::polar(1.0, c.value * static_cast<double>(lo)));
            break;
          }
          case ComponentKind::kPBS: {
            const int other = p == c.path ? c.path2 : c.path;
            put(a == 0 ? p : other, a, l, col, 1.0);
            break;
          }
          case ComponentKind::kHWP:
          case ComponentKind::kQWP: {
            const Mat2 m = c.kind == ComponentKind::kHWP ? hwp_matrix(c.value) : qwp_matrix(c.value);
            for (int b = 0; b < 2; ++b) put(p, b, l, col, m[static_cast<size_t>(b)][static_cast<size_t>(a)]);
            break;
          }
          case ComponentKind::kQPlate: {
            const auto ua = static_cast<size_t>(a);
            for (int b = 0; b < 2; ++b) {
              const auto ub = static_cast<size_t>(b);
              put(p, b, l + c.shift, col, kL[ub] * std::conj(kR[ua]));
              put(p, b, l - c.shift, col, kR[ub] * std::conj(kL[ua]));
            }
            break;
          }
        }
      }
    }
  }
  SparseOp op(s.dim(), s.dim());
  op.setFromTriplets(trip.begin(), trip.end());
  return op;
}

TruncatedOperator component_unitary(const Component& c, const ModeSpace& s) {
  int64_t bw = (c.kind == ComponentKind::kHologram || c.kind == ComponentKind::kQPlate) ? std::abs(c.shift) : 0;
  if (c.kind == ComponentKind::kMirror || (c.kind == ComponentKind::kDovePrism && c.sign_flip)) bw = 2 * s.oam.l_max;
  return {Eigen::MatrixXcd(component_sparse(c, s)), s.oam, bw};
}

Eigen::MatrixXcd apply_circuit(const OpticalCircuit& c, const Eigen::MatrixXcd& states) {
  if (states.rows() != c.space.dim()) throw SizingError("state dimension does not match the mode space");
  Eigen::MatrixXcd out = states;
  for (const auto& st : c.stages) out = component_sparse(st, c.space) * out;
  return out;
}

TruncatedOperator circuit_unitary(const OpticalCircuit& c) {
  const Eigen::Index n = c.space.dim();
  return {apply_circuit(c, Eigen::MatrixXcd::Identity(n, n)), c.space.oam, c.oam_bandwidth()};
}

std::vector<Component> inverse_stages(const std::vector<Component>& stages) {
  std::vector<Component> out;
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    Component c = *it;
    switch (c.kind) {
      case ComponentKind::kBeamSplitter:
        // [[t, -ir], [-ir, t]] = PS(pi on b) BS PS(pi on b)
        out.push_back(Component::phase_shifter(c.path2, kPi));
        out.push_back(c);
        out.push_back(Component::phase_shifter(c.path2, kPi));
        break;
      case ComponentKind::kPhaseShifter:
        c.value = -c.value;
        out.push_back(c);
        break;
      case ComponentKind::kHologram:
        c.shift = -c.shift;
        out.push_back(c);
        break;
      case ComponentKind::kDovePrism:
        if (!c.sign_flip) c.value = -c.value;
        out.push_back(c);
        break;
      case ComponentKind::kQWP:
        // QWP^4 = 1
        out.insert(out.end(), 3, c);
        break;
      default:  // mirror, PBS, HWP, Q-plate are involutions
        out.push_back(c);
        break;
    }
  }
  return out;
}

OpticalCircuit inverse(const OpticalCircuit& c) { return {c.space, inverse_stages(c.stages)}; }

// ---------------------------------------------------------------------------
// sorters

std::vector<Component> mz_sorter(int a, int b, double alpha, double beta, bool strict_mirrors) {
  std::vector<Component> s;
  s.push_back(Component::beam_splitter(a, b));
  if (strict_mirrors) {
    s.push_back(Component::mirror(a));
    s.push_back(Component::dove_prism(a, alpha, true));
  } else {
    s.push_back(Component::dove_prism(a, alpha));
  }
  s.push_back(Component::phase_shifter(b, beta));
  s.push_back(Component::beam_splitter(a, b));
  return s;
}

OpticalCircuit dp_sorter(const ModeSpace& s, int in_path, int out_even, int out_odd, bool strict_mirrors) {
  if (out_even == out_odd) throw ConfigurationError("dp_sorter: even and odd outputs must differ");
  if (in_path != out_even && in_path != out_odd) throw ConfigurationError("dp_sorter: input must be an output port");
  OpticalCircuit c{s, {}};
  // beta = 0 sends even modes to the far port, beta = pi sends odd modes there
  if (in_path == out_odd) c.add(mz_sorter(in_path, out_even, kPi, 0.0, strict_mirrors));
  else c.add(mz_sorter(in_path, out_odd, kPi, kPi, strict_mirrors));
  return c;
}

Report verify_dp_sorter(int64_t l_max, int64_t radius, double tol) {
  Report rep("dp_sorter");
  const ModeSpace s{2, false, Window(l_max)};
  for (int variant = 0; variant < 2; ++variant) {
    const int even = variant == 0 ? 1 : 0, odd = variant == 0 ? 0 : 1;
    const OpticalCircuit c = dp_sorter(s, 0, even, odd);
    Eigen::MatrixXcd in = Eigen::MatrixXcd::Zero(s.dim(), 2 * radius + 1);
    for (int64_t l = -radius; l <= radius; ++l) in(s.index(0, 0, l), l + radius) = 1.0;
    const Eigen::MatrixXcd out = apply_circuit(c, in);
    std::array<std::optional<cd>, 2> phase;
    double err = 0.0;
    for (int64_t l = -radius; l <= radius; ++l) {
      const int cls = static_cast<int>(((l % 2) + 2) % 2);
      const int port = cls == 0 ? even : odd;
      Eigen::VectorXcd want = Eigen::VectorXcd::Zero(s.dim());
      const cd amp = out(s.index(port, 0, l), l + radius);
      if (!phase[static_cast<size_t>(cls)]) phase[static_cast<size_t>(cls)] = amp;
      want(s.index(port, 0, l)) = *phase[static_cast<size_t>(cls)];
      err = std::max(err, (out.col(l + radius) - want).cwiseAbs().maxCoeff());
      err = std::max(err, std::abs(std::abs(amp) - 1.0));
    }
    const std::string tag = variant == 0 ? "even->1,odd->0" : "even->0,odd->1";
    rep.add_float("parity_routing(" + tag + ")", err, tol);
    auto& ph = rep.extra()[tag];
    ph["phase_even"] = {phase[0]->real(), phase[0]->imag()};
    ph["phase_odd"] = {phase[1]->real(), phase[1]->imag()};
  }
  return rep;
}

// ---------------------------------------------------------------------------
// codes

LogicalCode LogicalCode::standard(int n_logical, int64_t l_max, double r) {
  if (n_logical < 1 || n_logical > 2) throw DomainError("LogicalCode: only 1 or 2 logical qubits are supported");
  LogicalCode code;
  code.n_logical = n_logical;
  const int64_t spacing = int64_t{1} << n_logical;
  const int64_t kmax = (l_max / 2) / spacing;
  if (kmax < 1) throw SizingError("LogicalCode: window too small for the code");
  std::map<int64_t, double> c;
  double norm = 0.0;
  for (int64_t k = -kmax; k <= kmax; ++k) {
    c[k] = std::pow(r, static_cast<double>(std::abs(k)));
    norm += c[k] * c[k];
  }
  norm = std::sqrt(norm);
  std::vector<int64_t> offsets;
  if (n_logical == 1) {
    offsets = {0, -1};
  } else {
    // index 2 b1 + b2 -> residue b1 + 2 b2, centred
    for (int j = 0; j < 4; ++j) {
      const int b1 = j >> 1, b2 = j & 1;
      const int64_t res = b1 + 2 * b2;
      offsets.push_back(res >= 2 ? res - 4 : res);
    }
  }
  for (int64_t off : offsets) {
    std::map<int64_t, cd> w;
    for (const auto& [k, v] : c) w[spacing * k + off] = v / norm;
    code.codewords.push_back(std::move(w));
  }
  return code;
}

int64_t LogicalCode::support_radius() const {
  int64_t r = 0;
  for (const auto& w : codewords)
    for (const auto& [l, v] : w) r = std::max(r, std::abs(l));
  return r;
}

Eigen::VectorXcd LogicalCode::vector(const ModeSpace& s, size_t j, int path, int pol) const {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(s.dim());
  for (const auto& [l, c] : codewords.at(j)) v(s.index(path, pol, l)) = c;
  return v;
}

// ---------------------------------------------------------------------------
// gates

nlohmann::json GateReport::to_json() const {
  nlohmann::json m = nlohmann::json::array();
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) row.push_back({matrix(r, c).real(), matrix(r, c).imag()});
    m.push_back(row);
  }
  nlohmann::json j = {{"gate", gate}, {"fidelity", fidelity}, {"leakage", leakage},
                      {"phase", phase}, {"matrix", m},         {"components", components}};
  if (alt_fidelity) j["alt_fidelity"] = *alt_fidelity;
  return j;
}

Report GateReport::to_report(double tol) const {
  Report rep("gate " + gate);
  rep.add_float(gate + ".fidelity", 1.0 - fidelity, tol, fmt(fidelity), "1");
  rep.add_float(gate + ".leakage", leakage, tol);
  rep.extra() = to_json();
  return rep;
}

GateReport verify_logical_gate(const OpticalCircuit& c, const std::vector<Eigen::VectorXcd>& inputs,
                               const std::vector<Eigen::VectorXcd>& outputs, const Eigen::MatrixXcd& target,
                               const Eigen::MatrixXcd* alt_target) {
  const Eigen::Index n = static_cast<Eigen::Index>(inputs.size());
  if (static_cast<Eigen::Index>(outputs.size()) != n || target.rows() != n || target.cols() != n) {
    throw SizingError("verify_logical_gate: codeword counts and target size disagree");
  }
  Eigen::MatrixXcd in(c.space.dim(), n), outb(c.space.dim(), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    in.col(k) = inputs[static_cast<size_t>(k)];
    outb.col(k) = outputs[static_cast<size_t>(k)];
  }
  const Eigen::MatrixXcd img = apply_circuit(c, in);
  GateReport g;
  g.matrix = outb.adjoint() * img;
  g.components = c.stages.size();
  const double dn = static_cast<double>(n);
  g.leakage = std::max(0.0, 1.0 - g.matrix.squaredNorm() / dn);
  const cd tr = (target.adjoint() * g.matrix).trace();
  g.fidelity = std::abs(tr) / dn;
  g.phase = std::arg(tr);
  if (alt_target) g.alt_fidelity = std::abs((alt_target->adjoint() * g.matrix).trace()) / dn;
  return g;
}

namespace {

struct GateSetup {
  OpticalCircuit circuit;
  std::vector<Eigen::VectorXcd> inputs, outputs;
  Eigen::MatrixXcd target, alt;
};

// even -> path 1 (phase i), odd -> path 0 (phase -1)
std::vector<Component> parity_sorter(bool strict) { return mz_sorter(0, 1, kPi, 0.0, strict); }

GateSetup build_gate(const std::string& name, const GateOptions& opt) {
  GateSetup g;
  const bool st = opt.strict_mirrors;
  const Window w(opt.l_max);
  if (name == "controlled_z") {
    g.circuit.space = ModeSpace{4, false, w};
    // parity, then DP(pi/2) sorters: 0 mod 4 -> 2, 2 mod 4 -> 1, 1 mod 4 -> 3, 3 mod 4 -> 0
    std::vector<Component> sort = parity_sorter(st);
    const auto even = mz_sorter(1, 2, kPi / 2, 0.0, st);
    const auto odd = mz_sorter(0, 3, kPi / 2, kPi / 2, st);
    sort.insert(sort.end(), even.begin(), even.end());
    sort.insert(sort.end(), odd.begin(), odd.end());
    g.circuit.add(sort).add(Component::phase_shifter(0, kPi)).add(inverse_stages(sort));
    const LogicalCode code = LogicalCode::standard(2, opt.l_max);
    for (size_t j = 0; j < 4; ++j) {
      g.inputs.push_back(code.vector(g.circuit.space, j));
      g.outputs.push_back(code.vector(g.circuit.space, j));
    }
    g.target = Eigen::MatrixXcd::Identity(4, 4);
    g.target(3, 3) = -1.0;
    g.alt = g.target;
    return g;
  }
  const LogicalCode code = LogicalCode::standard(1, opt.l_max);
  if (name == "pol_to_oam") {
    g.circuit.space = ModeSpace{2, true, w};
    g.circuit.add(Component::qwp(0, kPi / 4))
        .add(Component::qplate(0, 1))
        .add(Component::qwp(0, kPi / 4))
        .add(Component::pbs(0, 1))
        .add(Component::hologram(0, -2))
        .add(Component::hologram(1, 1))
        .add(Component::hwp(1, kPi / 4))
        .add(Component::phase_shifter(0, -kPi / 2))
        .add(inverse_stages(parity_sorter(st)));
    // inputs |H>|even>, |V>|even>; outputs |H>|0_L>, |H>|1_L>
    g.inputs = {code.vector(g.circuit.space, 0, 0, 0), code.vector(g.circuit.space, 0, 0, 1)};
    g.outputs = {code.vector(g.circuit.space, 0, 0, 0), code.vector(g.circuit.space, 1, 0, 0)};
    // H -> odd codeword, V -> even codeword: X here, identity under the swapped labelling
    g.target = Eigen::MatrixXcd::Zero(2, 2);
    g.target(0, 1) = g.target(1, 0) = 1.0;
    g.alt = Eigen::MatrixXcd::Identity(2, 2);
    return g;
  }
  g.circuit.space = ModeSpace{2, false, w};
  const auto sort = parity_sorter(st);
  g.target = Eigen::MatrixXcd::Identity(2, 2);
  if (name == "phase") {
    g.circuit.add(sort).add(Component::phase_shifter(0, opt.phi)).add(inverse_stages(sort));
    g.target(1, 1) = std::polar(1.0, opt.phi);
    g.alt = Eigen::MatrixXcd::Identity(2, 2);
    g.alt(0, 0) = std::polar(1.0, opt.phi);
  } else if (name == "not") {
    // even arm (1) becomes odd, odd arm (0) becomes even; recombine with the
    // inverse of the sorter that takes even -> 0, odd -> 1
    g.circuit.add(sort)
        .add(Component::hologram(1, -1))
        .add(Component::hologram(0, 1))
        .add(inverse_stages(mz_sorter(0, 1, kPi, kPi, st)));
    g.target << 0, 1, 1, 0;
    g.alt = g.target;
  } else if (name == "hadamard") {
    // odd arm shifted onto the even arm's OAM content, path Hadamard, undo
    g.circuit.add(sort)
        .add(Component::hologram(0, 1))
        .add(Component::phase_shifter(0, kPi))
        .add(Component::beam_splitter(0, 1))
        .add(Component::hologram(0, -1))
        .add(inverse_stages(sort));
    g.target << 1, 1, 1, -1;
    g.target *= kRt2;
    g.alt = g.target;
  } else {
    throw DomainError("unknown gate '" + name + "' (phase, not, hadamard, controlled_z, pol_to_oam)");
  }
  for (size_t j = 0; j < 2; ++j) {
    g.inputs.push_back(code.vector(g.circuit.space, j));
    g.outputs.push_back(code.vector(g.circuit.space, j));
  }
  return g;
}

}  // namespace

OpticalCircuit gate_circuit(const std::string& name, const GateOptions& opt) { return build_gate(name, opt).circuit; }

GateReport verify_gate(const std::string& name, const GateOptions& opt) {
  const GateSetup g = build_gate(name, opt);
  const int n = name == "controlled_z" ? 2 : 1;
  const int64_t need = LogicalCode::standard(n, opt.l_max).support_radius() + g.circuit.oam_bandwidth();
  if (need >= opt.l_max) {
    throw SizingError("codeword support plus circuit bandwidth (" + std::to_string(need) + ") reaches the window edge");
  }
  GateReport r = verify_logical_gate(g.circuit, g.inputs, g.outputs, g.target, &g.alt);
  r.gate = name == "phase" ? "phase(" + fmt(opt.phi) + ")" : name;
  return r;
}

double optical_weyl_residual(int64_t l_max, double alpha, int64_t q) {
  const ModeSpace s{1, false, Window(l_max)};
  OpticalCircuit lhs{s, {Component::hologram(0, q), Component::dove_prism(0, alpha)}};
  OpticalCircuit rhs{s, {Component::dove_prism(0, alpha), Component::hologram(0, q)}};
  TruncatedOperator a = circuit_unitary(lhs), b = circuit_unitary(rhs);
  b.matrix *= std::polar(1.0, static_cast<double>(q) * alpha);
  return interior_residual(a, b, std::abs(q) + 1);
}

Report optics_suite(int64_t l_max, bool strict_mirrors) {
  Report rep("optics");
  rep.merge(verify_dp_sorter(l_max, std::min<int64_t>(24, l_max - 1)), "sorter.");
  GateOptions opt;
  opt.l_max = l_max;
  opt.strict_mirrors = strict_mirrors;
  nlohmann::json gates = nlohmann::json::array();
  auto add_gate = [&](const std::string& name) {
    const GateReport g = verify_gate(name, opt);
    rep.merge(g.to_report(), "gate.");
    gates.push_back(g.to_json());
  };
  for (int k = 0; k < 8; ++k) {
    opt.phi = 2.0 * kPi * k / 8.0 + 0.1;
    add_gate("phase");
  }
  for (const char* name : {"not", "hadamard", "controlled_z", "pol_to_oam"}) add_gate(name);
  rep.extra()["gates"] = gates;

  double weyl = 0.0;
  for (double alpha : {kPi / 3, 1.0, kPi / 2})
    for (int64_t q : {-2, 1, 3}) weyl = std::max(weyl, optical_weyl_residual(l_max, alpha, q));
  rep.add_float("weyl_relation(DP,Hg)", weyl, 1e-12);

  // every component type is unitary on the interior
  const ModeSpace s{2, true, Window(l_max)};
  const std::vector<Component> all = {Component::beam_splitter(0, 1, 0.6), Component::phase_shifter(1, 0.3),
                                      Component::mirror(0), Component::hologram(1, 2), Component::dove_prism(0, 0.7),
                                      Component::dove_prism(0, 0.7, true), Component::pbs(0, 1),
                                      Component::hwp(0, 0.4), Component::qwp(1, 0.2), Component::qplate(0, 1)};
  double unit = 0.0;
  for (const auto& c : all) {
    const TruncatedOperator u = component_unitary(c, s);
    TruncatedOperator p{u.matrix.adjoint() * u.matrix, s.oam, 0};
    // interior block of each (path, pol) sector
    const Eigen::Index n = s.oam.dim();
    const int64_t m = 3;
    for (Eigen::Index sec = 0; sec < s.dim() / n; ++sec) {
      const Eigen::MatrixXcd blk = p.matrix.block(sec * n + m, sec * n + m, n - 2 * m, n - 2 * m);
      unit = std::max(unit, (blk - Eigen::MatrixXcd::Identity(n - 2 * m, n - 2 * m)).cwiseAbs().maxCoeff());
    }
  }
  rep.add_float("components_unitary", unit, 1e-12);
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

const std::map<std::string, ComponentKind>& kind_names() {
  static const std::map<std::string, ComponentKind> m = {
      {"beam_splitter", ComponentKind::kBeamSplitter}, {"phase_shifter", ComponentKind::kPhaseShifter},
      {"mirror", ComponentKind::kMirror},              {"hologram", ComponentKind::kHologram},
      {"dove_prism", ComponentKind::kDovePrism},       {"pbs", ComponentKind::kPBS},
      {"hwp", ComponentKind::kHWP},                    {"qwp", ComponentKind::kQWP},
      {"qplate", ComponentKind::kQPlate}};
  return m;
}

std::string kind_name(ComponentKind k) {
  for (const auto& [n, v] : kind_names())
    if (v == k) return n;
  return "?";
}

template <class T>
T field(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw std::invalid_argument(where + ": missing '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(where + "." + key + ": wrong type");
  }
}

}  // namespace

nlohmann::json circuit_to_json(const OpticalCircuit& c) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : c.stages) {
    nlohmann::json j = {{"kind", kind_name(s.kind)}};
    switch (s.kind) {
      case ComponentKind::kBeamSplitter: j["paths"] = {s.path, s.path2}; j["t"] = s.value; break;
      case ComponentKind::kPBS: j["paths"] = {s.path, s.path2}; break;
      case ComponentKind::kPhaseShifter: j["path"] = s.path; j["phi"] = s.value; break;
      case ComponentKind::kMirror: j["path"] = s.path; break;
      case ComponentKind::kHologram: j["path"] = s.path; j["q"] = s.shift; break;
      case ComponentKind::kDovePrism: j["path"] = s.path; j["alpha"] = s.value; j["sign_flip"] = s.sign_flip; break;
      case ComponentKind::kHWP:
      case ComponentKind::kQWP: j["path"] = s.path; j["angle"] = s.value; break;
      case ComponentKind::kQPlate: j["path"] = s.path; j["q"] = static_cast<double>(s.shift) / 2.0; break;
    }
    stages.push_back(j);
  }
  return {{"space", {{"paths", c.space.n_paths}, {"polarization", c.space.polarization}, {"l_max", c.space.oam.l_max}}},
          {"stages", stages}};
}

OpticalCircuit circuit_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("circuit: expected an object");
  if (!j.contains("space") || !j["space"].is_object()) throw std::invalid_argument("circuit: missing 'space' object");
  const auto& sp = j["space"];
  OpticalCircuit c;
  c.space.n_paths = field<int>(sp, "paths", "space");
  if (c.space.n_paths < 1) throw std::invalid_argument("space.paths: must be positive");
  c.space.polarization = sp.value("polarization", false);
  c.space.oam = Window(sp.value("l_max", int64_t{32}));
  if (!j.contains("stages") || !j["stages"].is_array()) throw std::invalid_argument("circuit: missing 'stages' array");
  for (size_t i = 0; i < j["stages"].size(); ++i) {
    const auto& s = j["stages"][i];
    const std::string where = "stages[" + std::to_string(i) + "]";
    const std::string kind = field<std::string>(s, "kind", where);
    auto it = kind_names().find(kind);
    if (it == kind_names().end()) throw std::invalid_argument(where + ".kind: unknown component '" + kind + "'");
    Component comp;
    switch (it->second) {
      case ComponentKind::kBeamSplitter:
      case ComponentKind::kPBS: {
        const auto ps = field<std::vector<int>>(s, "paths", where);
        if (ps.size() != 2) throw std::invalid_argument(where + ".paths: expected two paths");
        comp = it->second == ComponentKind::kPBS ? Component::pbs(ps[0], ps[1])
                                                 : Component::beam_splitter(ps[0], ps[1], s.value("t", kRt2));
        break;
      }
      case ComponentKind::kPhaseShifter: comp = Component::phase_shifter(field<int>(s, "path", where), field<double>(s, "phi", where)); break;
      case ComponentKind::kMirror: comp = Component::mirror(field<int>(s, "path", where)); break;
      case ComponentKind::kHologram: comp = Component::hologram(field<int>(s, "path", where), field<int64_t>(s, "q", where)); break;
      case ComponentKind::kDovePrism:
        comp = Component::dove_prism(field<int>(s, "path", where), field<double>(s, "alpha", where), s.value("sign_flip", false));
        break;
      case ComponentKind::kHWP: comp = Component::hwp(field<int>(s, "path", where), field<double>(s, "angle", where)); break;
      case ComponentKind::kQWP: comp = Component::qwp(field<int>(s, "path", where), field<double>(s, "angle", where)); break;
      case ComponentKind::kQPlate: {
        const double q = field<double>(s, "q", where);
        const double tq = 2.0 * q;
        if (std::abs(tq - std::round(tq)) > 1e-12) throw std::invalid_argument(where + ".q: charge must be a multiple of 1/2");
        comp = Component::qplate(field<int>(s, "path", where), static_cast<int64_t>(std::llround(tq)));
        break;
      }
    }
    try {
      validate(comp, c.space);
    } catch (const ConfigurationError& e) {
      throw ConfigurationError(where + ": " + e.what());
    }
    c.stages.push_back(comp);
  }
  return c;
}

Eigen::VectorXcd state_vector_from_json(const ModeSpace& s, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw std::invalid_argument("input state: expected an object with an 'entries' array");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(s.dim());
  for (size_t i = 0; i < j["entries"].size(); ++i) {
    const auto& e = j["entries"][i];
    const std::string where = "entries[" + std::to_string(i) + "]";
    const int path = e.value("path", 0);
    const int pol = e.value("pol", 0);
    const int64_t ell = field<int64_t>(e, "ell", where);
    if (path < 0 || path >= s.n_paths) throw std::invalid_argument(where + ".path: out of range");
    if (pol < 0 || pol >= s.pol_dim()) throw std::invalid_argument(where + ".pol: out of range");
    if (!s.oam.contains(ell)) throw SizingError(where + ".ell: outside the window");
    v(s.index(path, pol, ell)) += cd(field<double>(e, "re", where), e.value("im", 0.0));
  }
  return v;
}

nlohmann::json state_vector_to_json(const ModeSpace& s, const Eigen::VectorXcd& v, double cutoff) {
  nlohmann::json es = nlohmann::json::array();
  for (int p = 0; p < s.n_paths; ++p)
    for (int a = 0; a < s.pol_dim(); ++a)
      for (int64_t l = -s.oam.l_max; l <= s.oam.l_max; ++l) {
        const cd z = v(s.index(p, a, l));
        if (std::abs(z) <= cutoff) continue;
        nlohmann::json e = {{"path", p}, {"ell", l}, {"re", z.real()}, {"im", z.imag()}};
        if (s.polarization) e["pol"] = a;
        es.push_back(e);
      }
  return {{"entries", es}};
}

nlohmann::json simulate(const OpticalCircuit& c, const nlohmann::json& input) {
  const Eigen::VectorXcd in = state_vector_from_json(c.space, input);
  const Eigen::VectorXcd out = apply_circuit(c, in);
  nlohmann::json j = state_vector_to_json(c.space, out);
  j["norm_in"] = in.norm();
  j["norm_out"] = out.norm();
  return j;
}

}  // namespace weylqubit
