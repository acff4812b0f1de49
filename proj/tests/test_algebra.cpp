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

#include "weylqubit/algebra.hpp"
#include "weylqubit/sampling.hpp"
#include "weylqubit/serialize.hpp"

namespace weylqubit {
namespace {

AlgebraElement W(int64_t p, int64_t q, int64_t ell) { return AlgebraElement::word_raw(Rational(p, q), ell); }

TEST(AlgebraTest, WeylCommutationRelation) {
  // U(theta) V = e^{i theta} V U(theta)
  for (const auto& [p, q] : {std::pair{1, 3}, {1, 2}, {5, 4}, {1, 7}}) {
    const AlgebraElement u = W(p, q, 0), v = W(0, 1, 1);
    EXPECT_TRUE(equals(u * v, Scalar::phase(Rational(p, q)) * (v * u))) << p << "/" << q;
  }
}

TEST(AlgebraTest, WordProductsAddAngles) {
  EXPECT_TRUE(equals(W(1, 3, 0) * W(1, 6, 0), W(1, 2, 0)));
  EXPECT_TRUE(equals(W(0, 1, 2) * W(0, 1, -2), AlgebraElement::identity()));
}

TEST(AlgebraTest, TwoPiWrapSign) {
  for (int64_t ell = -3; ell <= 3; ++ell) {
    const Scalar sign = (ell % 2 == 0) ? Scalar(1) : Scalar(-1);
    EXPECT_TRUE(equals(AlgebraElement::word_raw(Rational(1, 3) + Rational(2), ell), sign * W(1, 3, ell)));
    EXPECT_TRUE(equals(AlgebraElement::word_raw(Rational(1, 3) - Rational(4), ell), W(1, 3, ell)));
  }
}

TEST(AlgebraTest, WordsAreUnitary) {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const AlgebraElement w = AlgebraElement::word_raw(random_angle(rng), static_cast<int64_t>(rng() % 7) - 3);
    EXPECT_TRUE(equals(w * adjoint(w), AlgebraElement::identity()));
    EXPECT_TRUE(equals(adjoint(w) * w, AlgebraElement::identity()));
  }
}

TEST(AlgebraTest, AssociativeAndAdjointAntiMultiplicative) {
  Rng rng(12);
  for (int i = 0; i < 25; ++i) {
    const AlgebraElement a = random_element(rng, 3), b = random_element(rng, 3), c = random_element(rng, 3);
    EXPECT_TRUE(equals((a * b) * c, a * (b * c)));
    EXPECT_TRUE(equals(adjoint(a * b), adjoint(b) * adjoint(a)));
    EXPECT_TRUE(equals(adjoint(adjoint(a)), a));
    EXPECT_TRUE(equals(a * (b + c), a * b + a * c));
  }
}

TEST(AlgebraTest, CanonicalFormCancels) {
  AlgebraElement a = W(1, 4, 2) + W(9, 4, 2);  // theta + 2 pi with even ell
  EXPECT_EQ(a.size(), 1u);
  a -= Scalar(2) * W(1, 4, 2);
  EXPECT_TRUE(a.is_zero());
}

TEST(AlgebraTest, Bandwidth) {
  EXPECT_EQ((W(0, 1, 3) + W(1, 2, -5)).bandwidth(), 5);
  EXPECT_EQ(AlgebraElement::identity().bandwidth(), 0);
}

TEST(AlgebraTest, PowerAndCommutator) {
  const AlgebraElement v = W(0, 1, 1);
  EXPECT_TRUE(equals(power(v, 3), W(0, 1, 3)));
  EXPECT_TRUE(commutator(W(1, 3, 0), W(2, 3, 0)).is_zero());
  EXPECT_FALSE(commutator(W(1, 3, 0), v).is_zero());
}

TEST(AlgebraTest, FloatModeTolerance) {
  AlgebraElement a = W(1, 3, 1) * Scalar(std::complex<double>(1.0, 1e-15));
  EXPECT_TRUE(a.float_mode());
  EXPECT_TRUE(equals_within(a, W(1, 3, 1), 1e-12));
  EXPECT_FALSE(equals_within(a, W(1, 3, 2), 1e-12));
}

TEST(SerializeTest, RoundTrip) {
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const AlgebraElement a = random_element(rng, 5);
    EXPECT_TRUE(equals(element_from_json(element_to_json(a)), a));
  }
}

TEST(SerializeTest, DiagnosticsNameTheTerm) {
  const auto j = nlohmann::json::parse(R"({"terms": [{"theta": "0", "ell": 1, "coeff": {"mag": "1", "phase": "0"}},
                                                     {"theta": "1/x", "ell": 0, "coeff": {"mag": "1", "phase": "0"}}]})");
  try {
    element_from_json(j);
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("terms[1]"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace weylqubit
