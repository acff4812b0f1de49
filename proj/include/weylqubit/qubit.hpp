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

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "weylqubit/algebra.hpp"
#include "weylqubit/oracle.hpp"
#include "weylqubit/report.hpp"

namespace weylqubit {

/// a+ = 1/2 W(0,-1) - i/2 W(pi,-1) and its adjoint a-, with
/// a1 = a+ + a-, a2 = -i a+ + i a-, a3 = W(pi,0).
///
/// On the OAM basis: a+|2k+1> = |2k>, a+|2k> = 0, a-|2k> = |2k+1>, so the
/// pairing |2k+s> = |s> (x) |k> turns a_i into sigma_i (x) 1.
struct QubitGenerators {
  AlgebraElement a_plus, a_minus, a1, a2, a3, identity;
};

QubitGenerators build_generators();
/// Shared immutable instance.
const QubitGenerators& generators();

using Block2 = std::array<std::array<AlgebraElement, 2>, 2>;
/// E00 = a+a-, E11 = a-a+, E01 = a+, E10 = a-.
const Block2& matrix_units();

Report verify_pauli(int64_t l_max = 32, double tol = 1e-12, int64_t margin = -1);

/// U1(theta) = e^{-i theta/2}(cos(theta/2) W(theta,0) + i sin(theta/2) W(theta+pi,0)).
/// Angles are in units of pi; any rational is accepted.
AlgebraElement u1(const Rational& theta);
/// V1 = V^2.
AlgebraElement v1();
/// W1(phi, ell) = e^{-i ell phi} U1(phi) V1^ell.
AlgebraElement w1(const Rational& phi, int64_t ell);

struct CommutantGenerators {
  std::function<AlgebraElement(const Rational&)> u1;
  AlgebraElement v1;
  std::function<AlgebraElement(const Rational&, int64_t)> w1;
};
CommutantGenerators commutant_generators();

/// Commutant suite: U1 group law, pi-periodicity, Weyl relation
/// U1(t) V1^l = e^{2 i l t} V1^l U1(t), and [W1(t,l), a_i] = 0.
Report verify_commutant(int samples = 50, uint64_t seed = 1, int64_t l_max = 32, double tol = 1e-12,
                        int64_t margin = -1);

/// Solves c1 [a, W(t,0)] + c2 [a, W(t+pi,0)] = 0 for a = a+, a- exactly and
/// compares with cos(t/2) : i sin(t/2); cross-checked by an SVD null vector.
Report commutant_ratio_check(const Rational& theta, int64_t l_max = 32, double tol = 1e-10);

/// U(t) = e^{i t/2} U1(t) (cos(t/2) 1 - i a3 sin(t/2)).
AlgebraElement reconstruct_u(const Rational& theta);
/// V = a+ V1 + a-.
AlgebraElement reconstruct_v();
struct WeylPairReconstruction {
  std::function<AlgebraElement(const Rational&)> u;
  AlgebraElement v;
};
WeylPairReconstruction reconstruct_weyl_pair();
Report verify_reconstruction(int samples = 20, uint64_t seed = 2);

/// W(t, l) -> W1(t/2, l), t/2 in [0, pi). A *-isomorphism onto the commutant.
AlgebraElement nest_iso(const AlgebraElement& a);
AlgebraElement nest_iso_power(const AlgebraElement& a, int k);

/// a = sum_{rc} E_rc * blocks[r][c]; blocks[r][c] = nest_iso(preimage[r][c]).
struct QubitDecomposition {
  Block2 blocks;
  Block2 preimage;
};

/// Default term cap for split and extract_qubits.
inline constexpr size_t kDefaultTermCap = 1u << 16;

QubitDecomposition split(const AlgebraElement& a, size_t term_cap = kDefaultTermCap);
AlgebraElement recombine(const QubitDecomposition& d);
/// Every block commutes with a1, a2, a3.
bool blocks_in_commutant(const QubitDecomposition& d);

/// 2^n x 2^n blocks; the row/column bit of level 1 is the most significant.
struct ExtractionTree {
  int depth = 0;
  std::vector<std::vector<AlgebraElement>> blocks;
  std::vector<std::vector<AlgebraElement>> preimage;
};

ExtractionTree extract_qubits(const AlgebraElement& a, int n, size_t term_cap = kDefaultTermCap);
AlgebraElement recombine(const ExtractionTree& t);
/// Level-k matrix unit nest_iso^{k-1}(E_rc), k = 1..n.
AlgebraElement nested_matrix_unit(int level, int r, int c);

Report verify_tensor(int samples = 100, uint64_t seed = 3);
Report verify_extraction(int random_samples = 20, uint64_t seed = 4);

struct FactorOptions {
  int64_t l_max = 16;
  int64_t bandwidth = 4;
  double tol = 1e-10;
  /// Dropping a generator group enlarges the commutant (negative control).
  bool use_qubit_generators = true;
  bool use_commutant_generators = true;
};
/// Dimension of the interior part of the joint commutant of a1, a2, a3, U1, V1
/// among banded matrices on the window.
int64_t joint_commutant_dimension(const FactorOptions& opt);
Report factor_check(const FactorOptions& opt = {});

/// Conditions (i), (iii), (iv), (v) of the general construction.
Report structure_predicates(int samples = 50, uint64_t seed = 5);

/// floor(l/2) on the window.
Eigen::VectorXd l1_diagonal(const Window& w);

}  // namespace weylqubit
