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

#include <cmath>
#include <complex>
#include <numbers>

#include "weylqubit/errors.hpp"
#include "weylqubit/oracle.hpp"
#include "weylqubit/sampling.hpp"

namespace weylqubit {
namespace {

using cd = std::complex<double>;

TEST(OracleTest, WordAction) {
  const Window w(12);
  for (const auto& [p, q, ell] : {std::tuple{1, 3, 2}, {0, 1, -1}, {3, 4, 3}, {1, 2, 0}}) {
    const double theta = std::numbers::pi * p / q;
    const TruncatedOperator op = represent(AlgebraElement::word_raw(Rational(p, q), ell), w);
    for (int64_t m = -6; m <= 6; ++m) {
      const Eigen::VectorXcd out = weylqubit::apply(op, basis_state(w, m));
      const cd expect = std::polar(1.0, theta * (m + ell / 2.0));
      EXPECT_NEAR(std::abs(out(w.index(m + ell)) - expect), 0.0, 1e-13);
      EXPECT_NEAR(out.norm(), 1.0, 1e-13);
    }
  }
}

TEST(OracleTest, HardTruncationAtEdge) {
  const Window w(8);
  const TruncatedOperator v = represent(AlgebraElement::word_raw(Rational(0), 1), w);
  EXPECT_NEAR(weylqubit::apply(v, basis_state(w, 8)).norm(), 0.0, 0.0);
}

TEST(OracleTest, HomomorphismOnInterior) {
  Rng rng(21);
  const Window w(24);
  for (int i = 0; i < 15; ++i) {
    const AlgebraElement a = random_element(rng, 3), b = random_element(rng, 3);
    const TruncatedOperator ab = represent(a * b, w);
    const TruncatedOperator pa = represent(a, w) * represent(b, w);
    EXPECT_TRUE(interior_equal(ab, pa, a.bandwidth() + b.bandwidth() + 1));
    EXPECT_TRUE(interior_equal(represent(adjoint(a), w), represent(a, w).adjoint(), a.bandwidth() + 1));
  }
}

TEST(OracleTest, SizingErrors) {
  EXPECT_THROW(Window(0), SizingError);
  const Window w(4);
  EXPECT_THROW(represent(AlgebraElement::word_raw(Rational(0), 9), w), SizingError);
  const TruncatedOperator id = identity_operator(w);
  EXPECT_THROW(interior_residual(id, id, 4), SizingError);
  EXPECT_THROW(interior_residual(id, id, -1), SizingError);
  EXPECT_DOUBLE_EQ(interior_residual(id, id, 2), 0.0);
}

TEST(OracleTest, DimensionMismatch) {
  const TruncatedOperator a = identity_operator(Window(4));
  EXPECT_ANY_THROW(weylqubit::apply(a, Eigen::VectorXcd::Zero(3)));
}

}  // namespace
}  // namespace weylqubit
