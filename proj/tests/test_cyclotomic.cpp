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

#include "weylqubit/cyclotomic.hpp"
#include "weylqubit/errors.hpp"
#include "weylqubit/rational.hpp"
#include "weylqubit/scalar.hpp"

namespace weylqubit {
namespace {

TEST(RationalTest, NormalizesSignAndGcd) {
  Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
}

TEST(RationalTest, ParseAndErrors) {
  EXPECT_EQ(Rational::parse("3/9"), Rational(1, 3));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_THROW(Rational(1, 0), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(RationalTest, OverflowRaisesCapacityError) {
  const Rational big(INT64_MAX / 2 + 1);
  EXPECT_THROW(big * Rational(4), CapacityError);
}

TEST(CyclotomicTest, ImaginaryUnitSquares) {
  const Cyclotomic i = Cyclotomic::imag_unit();
  EXPECT_EQ(i * i, Cyclotomic(-1));
  EXPECT_EQ(i.conj(), -i);
}

TEST(CyclotomicTest, PhasesMultiply) {
  const Cyclotomic a = Cyclotomic::phase(Rational(1, 3));
  const Cyclotomic b = Cyclotomic::phase(Rational(1, 6));
  EXPECT_EQ(a * b, Cyclotomic::imag_unit());
  EXPECT_EQ(Cyclotomic::phase(Rational(2)), Cyclotomic(1));
  EXPECT_EQ(a * a.conj(), Cyclotomic(1));
}

TEST(CyclotomicTest, SumOfRootsVanishes) {
  Cyclotomic s;
  for (int k = 0; k < 5; ++k) s += Cyclotomic::phase(Rational(2 * k, 5));
  EXPECT_TRUE(s.is_zero());
}

TEST(CyclotomicTest, TrigMatchesDouble) {
  for (int k = 0; k < 24; ++k) {
    const Rational r(k, 12);
    EXPECT_NEAR(Cyclotomic::cos_pi(r).to_complex().real(), std::cos(r.to_double() * std::numbers::pi), 1e-14);
    EXPECT_NEAR(Cyclotomic::sin_pi(r).to_complex().real(), std::sin(r.to_double() * std::numbers::pi), 1e-14);
    EXPECT_NEAR(Cyclotomic::sin_pi(r).to_complex().imag(), 0.0, 1e-14);
  }
  // cos^2 + sin^2 = 1 exactly
  const Rational r(1, 5);
  const Cyclotomic c = Cyclotomic::cos_pi(r), s = Cyclotomic::sin_pi(r);
  EXPECT_EQ(c * c + s * s, Cyclotomic(1));
}

TEST(CyclotomicTest, ComponentsRoundTrip) {
  const Cyclotomic z = Cyclotomic(Rational(1, 2)) + Cyclotomic::phase(Rational(3, 4)) * Cyclotomic(3);
  Cyclotomic back;
  for (const auto& p : z.components()) back += Cyclotomic(p.magnitude) * Cyclotomic::phase(p.phase);
  EXPECT_EQ(back, z);
}

TEST(ScalarTest, FloatContaminates) {
  const Scalar e = Scalar::imag_unit();
  const Scalar f(std::complex<double>(0.5, 0.0));
  const Scalar p = e * f;
  EXPECT_TRUE(e.is_exact());
  EXPECT_FALSE(p.is_exact());
  EXPECT_TRUE(p.approx_equal(Scalar(std::complex<double>(0.0, 0.5)), 1e-15));
  EXPECT_THROW(p.exact(), std::exception);
}

}  // namespace
}  // namespace weylqubit
