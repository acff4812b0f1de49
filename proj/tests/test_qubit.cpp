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


#include <gtest/gtest.h>

#include "weylqubit/errors.hpp"
#include "weylqubit/exact_linear.hpp"
#include "weylqubit/oracle.hpp"
#include "weylqubit/qubit.hpp"
#include "weylqubit/sampling.hpp"

namespace weylqubit {
namespace {

const AlgebraElement& one() {
  static const AlgebraElement id = AlgebraElement::identity();
  return id;
}

TEST(QubitTest, LadderAction) {
  const auto& g = generators();
  const Window w(10);
  const TruncatedOperator ap = represent(g.a_plus, w), am = represent(g.a_minus, w);
  EXPECT_NEAR((weylqubit::apply(ap, basis_state(w, 3)) - basis_state(w, 2)).norm(), 0.0, 1e-14);
  EXPECT_NEAR(weylqubit::apply(ap, basis_state(w, 2)).norm(), 0.0, 1e-14);
  EXPECT_NEAR((weylqubit::apply(am, basis_state(w, 2)) - basis_state(w, 3)).norm(), 0.0, 1e-14);
  EXPECT_NEAR(weylqubit::apply(am, basis_state(w, -3)).norm(), 0.0, 1e-14);
}

TEST(QubitTest, PauliAlgebraExact) {
  const auto& g = generators();
  const Scalar i = Scalar::imag_unit();
  EXPECT_TRUE(equals(g.a1 * g.a1, one()));
  EXPECT_TRUE(equals(g.a2 * g.a2, one()));
  EXPECT_TRUE(equals(g.a3 * g.a3, one()));
  EXPECT_TRUE(equals(g.a1 * g.a2, i * g.a3));
  EXPECT_TRUE(equals(g.a2 * g.a3, i * g.a1));
  EXPECT_TRUE(equals(g.a3 * g.a1, i * g.a2));
  EXPECT_TRUE(equals(adjoint(g.a_plus), g.a_minus));
  EXPECT_TRUE((g.a_plus * g.a_plus).is_zero());
}

TEST(QubitTest, VerifyPauliReport) {
  const Report r = verify_pauli();
  EXPECT_TRUE(r.all_pass()) << r.to_text();
  EXPECT_GE(r.entries().size(), 12u);
}

TEST(QubitTest, MatrixUnits) {
  const Block2& e = matrix_units();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          const AlgebraElement prod = e[a][b] * e[c][d];
          if (b == c) {
            EXPECT_TRUE(equals(prod, e[a][d]));
          } else {
            EXPECT_TRUE(prod.is_zero());
          }
        }
  EXPECT_TRUE(equals(e[0][0] + e[1][1], one()));
}

TEST(QubitTest, CommutantCommutesWithGenerators) {
  const auto& g = generators();
  for (const Rational& t : {Rational(1, 3), Rational(3, 5), Rational(7, 4)}) {
    for (const AlgebraElement* a : {&g.a1, &g.a2, &g.a3}) {
      EXPECT_TRUE(commutator(u1(t), *a).is_zero());
      EXPECT_TRUE(commutator(w1(t, -2), *a).is_zero());
    }
  }
  EXPECT_TRUE(equals(u1(Rational(1)), one()));
  EXPECT_TRUE(equals(u1(Rational(1, 3)) * u1(Rational(1, 4)), u1(Rational(7, 12))));
}

TEST(QubitTest, CommutantReports) {
  const Report c = verify_commutant(10, 7);
  EXPECT_TRUE(c.all_pass()) << c.to_text();
  for (const Rational& t : {Rational(1, 2), Rational(2, 3), Rational(0)}) {
    const Report r = commutant_ratio_check(t);
    EXPECT_TRUE(r.all_pass()) << r.to_text();
  }
}

TEST(QubitTest, Reconstruction) {
  const auto& g = generators();
  EXPECT_TRUE(equals(reconstruct_v(), AlgebraElement::word_raw(Rational(0), 1)));
  EXPECT_TRUE(equals(reconstruct_v(), g.a_plus * v1() + g.a_minus));
  for (const Rational& t : {Rational(1, 3), Rational(5, 6), Rational(3, 2)}) {
    EXPECT_TRUE(equals(reconstruct_u(t), AlgebraElement::word_raw(t, 0)));
  }
}

TEST(QubitTest, NestIsoIsStarHomomorphism) {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const AlgebraElement a = random_element(rng, 3), b = random_element(rng, 3);
    EXPECT_TRUE(equals(nest_iso(a * b), nest_iso(a) * nest_iso(b)));
    EXPECT_TRUE(equals(nest_iso(adjoint(a)), adjoint(nest_iso(a))));
    const auto& g = generators();
    EXPECT_TRUE(commutator(nest_iso(a), g.a3).is_zero());
    EXPECT_TRUE(commutator(nest_iso(a), g.a_plus).is_zero());
  }
}

TEST(QubitTest, SplitRecombine) {
  Rng rng(32);
  for (int i = 0; i < 30; ++i) {
    const AlgebraElement a = random_element(rng, 6);
    const QubitDecomposition d = split(a);
    EXPECT_TRUE(equals(recombine(d), a));
    EXPECT_TRUE(blocks_in_commutant(d));
  }
}

TEST(QubitTest, SplitOfGenerators) {
  // a3 = diag(1, -1) and a+ = E01 with scalar blocks
  const auto& g = generators();
  const QubitDecomposition d = split(g.a3);
  EXPECT_TRUE(equals(d.blocks[0][0], one()));
  EXPECT_TRUE(equals(d.blocks[1][1], -one()));
  EXPECT_TRUE(d.blocks[0][1].is_zero());
  const QubitDecomposition p = split(g.a_plus);
  EXPECT_TRUE(equals(p.blocks[0][1], one()));
  EXPECT_TRUE(p.blocks[0][0].is_zero());
}

TEST(QubitTest, ExtractionRoundTrip) {
  const AlgebraElement w = AlgebraElement::word_raw(Rational(2, 5), -3);
  for (int n = 1; n <= 3; ++n) {
    const ExtractionTree t = extract_qubits(w, n);
    EXPECT_EQ(t.depth, n);
    EXPECT_EQ(t.blocks.size(), size_t{1} << n);
    EXPECT_TRUE(equals(recombine(t), w));
  }
  EXPECT_THROW(extract_qubits(w, 0), DomainError);
}

TEST(QubitTest, TermCapRaisesCapacityError) {
  Rng rng(33);
  const AlgebraElement a = random_element(rng, 6);
  EXPECT_THROW(split(a, 1), CapacityError);
}

TEST(QubitTest, FactorAndNegativeControls) {
  EXPECT_EQ(joint_commutant_dimension({}), 1);
  FactorOptions no_qubit;
  no_qubit.use_qubit_generators = false;
  EXPECT_GT(joint_commutant_dimension(no_qubit), 1);
  const Report r = structure_predicates(10, 9);
  EXPECT_TRUE(r.all_pass()) << r.to_text();
}

TEST(ExactLinearTest, RankAndSpan) {
  const auto& g = generators();
  EXPECT_EQ(exact_rank(std::vector<AlgebraElement>{g.a1, g.a2, g.a3, one()}), 4u);
  EXPECT_EQ(exact_rank(std::vector<AlgebraElement>{g.a1, g.a_plus, g.a_minus}), 2u);
  EXPECT_TRUE(in_exact_span(g.a_plus, {g.a1, g.a2}));
  EXPECT_FALSE(in_exact_span(g.a3, {g.a1, g.a2}));
}

}  // namespace
}  // namespace weylqubit
