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

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "json.hpp"
#include "weylqubit/oracle.hpp"
#include "weylqubit/report.hpp"

namespace weylqubit {

/// path (x) polarization (x) OAM. Basis order: path major, then polarization
/// (0 = H, 1 = V), then l.
struct ModeSpace {
  int n_paths = 1;
  bool polarization = false;
  Window oam{32};

  int pol_dim() const { return polarization ? 2 : 1; }
  Eigen::Index dim() const { return n_paths * pol_dim() * oam.dim(); }
  Eigen::Index index(int path, int pol, int64_t ell) const;
};

enum class ComponentKind { kBeamSplitter, kPhaseShifter, kMirror, kHologram, kDovePrism, kPBS, kHWP, kQWP, kQPlate };

/// One optical element. Angles are radians; `shift` is the hologram charge q
/// or twice the Q-plate charge.
struct Component {
  ComponentKind kind = ComponentKind::kPhaseShifter;
  int path = 0;
  int path2 = 1;
  double value = 0.0;
  int64_t shift = 0;
  bool sign_flip = false;

  /// [[t, i r], [i r, t]] on (path, path2), r = sqrt(1 - t^2).
  static Component beam_splitter(int a, int b, double t = 0.70710678118654752440);
  static Component phase_shifter(int p, double phi);
  /// l -> -l.
  static Component mirror(int p);
  /// V^q.
  static Component hologram(int p, int64_t q);
  /// e^{i alpha L}, preceded by l -> -l when sign_flip is set.
  static Component dove_prism(int p, double alpha, bool sign_flip = false);
  /// H keeps its path, V swaps a and b.
  static Component pbs(int a, int b);
  static Component hwp(int p, double angle);
  static Component qwp(int p, double angle);
  /// |L><R| (x) V^{2q} + |R><L| (x) V^{-2q}; twice_q = 2q.
  static Component qplate(int p, int64_t twice_q);

  std::string label() const;
};

struct OpticalCircuit {
  ModeSpace space;
  std::vector<Component> stages;  ///< applied first to last

  OpticalCircuit& add(const Component& c) {
    stages.push_back(c);
    return *this;
  }
  OpticalCircuit& add(const std::vector<Component>& cs) {
    stages.insert(stages.end(), cs.begin(), cs.end());
    return *this;
  }
  /// Total |OAM shift| any amplitude can pick up.
  int64_t oam_bandwidth() const;
};

using SparseOp = Eigen::SparseMatrix<std::complex<double>>;

/// Throws ConfigurationError if the component does not fit the space.
void validate(const Component& c, const ModeSpace& s);
SparseOp component_sparse(const Component& c, const ModeSpace& s);
TruncatedOperator component_unitary(const Component& c, const ModeSpace& s);
TruncatedOperator circuit_unitary(const OpticalCircuit& c);
/// Applies the circuit to each column.
Eigen::MatrixXcd apply_circuit(const OpticalCircuit& c, const Eigen::MatrixXcd& states);

std::vector<Component> inverse_stages(const std::vector<Component>& stages);
OpticalCircuit inverse(const OpticalCircuit& c);

/// BS(a,b), DP(alpha) on a, PS(beta) on b, BS(a,b). Modes with
/// e^{i alpha l} = e^{i beta} leave on b with phase i e^{i beta}; modes with
/// e^{i alpha l} = -e^{i beta} stay on a with phase -e^{i beta}.
std::vector<Component> mz_sorter(int a, int b, double alpha, double beta, bool strict_mirrors = false);

/// Parity sorter; in_path must be one of the two outputs.
OpticalCircuit dp_sorter(const ModeSpace& s, int in_path, int out_even, int out_odd, bool strict_mirrors = false);

/// Parity routing for |l| <= radius; entries carry the per-class phases.
Report verify_dp_sorter(int64_t l_max = 32, int64_t radius = 24, double tol = 1e-12);

/// Codewords on residue classes; n = 1: |0> = sum c_k |2k>, |1> = sum c_k |2k-1>;
/// n = 2: bits (b1, b2) on m = b1 + 2 b2 (mod 4), index 2 b1 + b2.
struct LogicalCode {
  int n_logical = 1;
  std::vector<std::map<int64_t, std::complex<double>>> codewords;

  /// c_k proportional to r^{|k|}, truncated to |spacing k| <= l_max/2.
  static LogicalCode standard(int n_logical, int64_t l_max, double r = 0.5);
  int64_t support_radius() const;
  Eigen::VectorXcd vector(const ModeSpace& s, size_t j, int path = 0, int pol = 0) const;
};

struct GateReport {
  std::string gate;
  double fidelity = 0.0;
  double leakage = 1.0;
  double phase = 0.0;  ///< arg tr(target^dagger M)
  Eigen::MatrixXcd matrix;
  std::optional<double> alt_fidelity;  ///< fidelity under the alternative labelling
  size_t components = 0;

  nlohmann::json to_json() const;
  Report to_report(double tol = 1e-10) const;
};

/// M_jk = <outputs_j | C | inputs_k>; fidelity |tr(T^dagger M)| / 2^n and
/// leakage 1 - sum |M_jk|^2 / 2^n.
GateReport verify_logical_gate(const OpticalCircuit& c, const std::vector<Eigen::VectorXcd>& inputs,
                               const std::vector<Eigen::VectorXcd>& outputs, const Eigen::MatrixXcd& target,
                               const Eigen::MatrixXcd* alt_target = nullptr);

struct GateOptions {
  double phi = 0.0;
  int64_t l_max = 32;
  bool strict_mirrors = false;
};

/// name in {phase, not, hadamard, controlled_z, pol_to_oam}.
OpticalCircuit gate_circuit(const std::string& name, const GateOptions& opt = {});
/// Builds the circuit and code for a named gate and verifies it.
GateReport verify_gate(const std::string& name, const GateOptions& opt = {});

/// DP(alpha) Hg(q) = e^{i q alpha} Hg(q) DP(alpha) on the interior; returns the residual.
double optical_weyl_residual(int64_t l_max, double alpha, int64_t q);

/// Sorter routing, all gates, the optical Weyl relation and unitarity.
Report optics_suite(int64_t l_max = 32, bool strict_mirrors = false);

nlohmann::json circuit_to_json(const OpticalCircuit& c);
OpticalCircuit circuit_from_json(const nlohmann::json& j);
/// Input {"entries": [{path, pol, ell, re, im}]} with path/pol optional (0).
Eigen::VectorXcd state_vector_from_json(const ModeSpace& s, const nlohmann::json& j);
nlohmann::json state_vector_to_json(const ModeSpace& s, const Eigen::VectorXcd& v, double cutoff = 1e-15);
nlohmann::json simulate(const OpticalCircuit& c, const nlohmann::json& input);

}  // namespace weylqubit
