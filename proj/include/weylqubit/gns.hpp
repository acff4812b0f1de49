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
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "weylqubit/algebra.hpp"
#include "weylqubit/oracle.hpp"
#include "weylqubit/report.hpp"
#include "weylqubit/sampling.hpp"

namespace weylqubit {

/// Pure state sum_l c_l |l> with finite support.
struct ReferenceState {
  std::map<int64_t, std::complex<double>> coeffs;

  /// Rescales to unit norm; throws DomainError on the zero vector.
  ReferenceState normalized() const;
  double norm() const;
  int64_t support_radius() const;
  bool even_support() const;
  Eigen::VectorXcd vector(const Window& w) const;
};

/// rho = sum rho_{l l'} |l><l'|.
struct DensityState {
  std::map<std::pair<int64_t, int64_t>, std::complex<double>> entries;

  int64_t support_radius() const;
  Eigen::MatrixXcd matrix(const Window& w) const;
  /// Hermitian, positive semidefinite and unit trace within tol, else DomainError.
  void validate(double tol = 1e-12) const;
};

using State = std::variant<ReferenceState, DensityState>;

/// Random normalized state with support in [-radius, radius] (even l only if asked).
ReferenceState random_reference_state(Rng& rng, int64_t radius, bool even_only);

/// {"entries": [{ell, re, im}]} or {"entries": [{ell, ellp, re, im}]}.
State state_from_json(const nlohmann::json& j);
State state_from_file(const std::string& path);

/// omega(a) = <psi|a psi> or Tr(rho a). Without a window one is sized to the
/// support plus the bandwidth of a; an explicit window that is too small
/// raises SizingError. Non-normalized states raise DomainError.
std::complex<double> omega(const State& s, const AlgebraElement& a, std::optional<Window> w = std::nullopt);

struct KernelResult {
  std::vector<AlgebraElement> kernel;      ///< {a-a+, a+} for even support
  std::vector<AlgebraElement> complement;  ///< {a+a-, a-}
  int64_t gram_rank = 0;                   ///< rank of the 4x4 Gram of {1, a1, a2, a3}
  Eigen::Matrix4cd gram;
};

KernelResult kernel_basis(const State& s, double rank_tol = 1e-10);

struct GnsRep {
  int dim = 0;
  std::vector<std::string> basis_labels;
  /// Keys "1", "a1", "a2", "a3", "a+", "a-".
  std::map<std::string, Eigen::MatrixXcd> matrices;
  bool irreducible = false;
  /// f_i = sum_k frame(k, i) b_k over the algebra elements `basis`.
  std::vector<AlgebraElement> basis;
  Eigen::MatrixXcd frame;
};

/// Even-support reference states use e0 = a+a-, e1 = a- and the coefficient
/// formula c^i_j(a) = omega(e_j* a e_i). Other states orthonormalize the Gram
/// matrix of the four matrix units.
GnsRep gns_rep(const State& s, double rank_tol = 1e-10);
/// Representation matrix of an arbitrary element in a constructed GNS space.
Eigen::MatrixXcd gns_matrix(const State& s, const GnsRep& rep, const AlgebraElement& a);

/// Least-squares residual of a's window matrix against span{1, a1, a2, a3}.
double qubit_membership_residual(const AlgebraElement& a, int64_t l_max = 32);

/// Tr(a) = sum_i <e_i, a e_i>; a outside the qubit span raises DomainError.
std::complex<double> qubit_trace(const State& s, const AlgebraElement& a, double membership_tol = 1e-10);
/// <psi|a psi> + <psi_perp|a psi_perp> with psi_perp = a- psi (even-support pure states).
std::complex<double> qubit_trace_two_term(const ReferenceState& psi, const AlgebraElement& a);

/// Normalization, rep matrices, kernel rank, trace and *-homomorphism checks.
Report verify_gns(const State& s, double tol = 1e-12);

}  // namespace weylqubit
