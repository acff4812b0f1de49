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
#include <string>
#include <vector>

#include "weylqubit/rational.hpp"

namespace weylqubit {

/// One summand r * e^{i pi phase} of a cyclotomic number, r > 0, phase in [0, 2).
struct PhaseComponent {
  Rational magnitude;
  Rational phase;
};

/// Exact element of the cyclotomic field Q(zeta_N), zeta_N = e^{2 pi i / N}.
///
/// Stored in the power basis {1, zeta, ..., zeta^{phi(N)-1}} reduced modulo the
/// N-th cyclotomic polynomial, as integer numerators over one positive common
/// denominator. The basis is linearly independent over Q, so two values at the
/// same level are equal iff their coefficient vectors are; values at different
/// levels are compared after lifting both to the lcm level.
class Cyclotomic {
 public:
  /// Largest level accepted before raising CapacityError.
  static constexpr int kMaxLevel = 1 << 13;

  Cyclotomic() : num_{0} {}
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
  Cyclotomic(int64_t n) : Cyclotomic(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  /// e^{i pi r}.
  static Cyclotomic phase(const Rational& r);
  static Cyclotomic imag_unit() { return phase(Rational(1, 2)); }
  /// cos(pi r) and sin(pi r), exactly.
  static Cyclotomic cos_pi(const Rational& r);
  static Cyclotomic sin_pi(const Rational& r);

  int level() const { return level_; }
  bool is_zero() const;
  /// True when the value lies in Q.
  bool is_rational() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  Cyclotomic conj() const;
  std::complex<double> to_complex() const;

  /// Decomposition into phase components, one per nonzero basis coefficient.
  /// Summing the components reproduces the value exactly.
  std::vector<PhaseComponent> components() const;
  std::string str() const;

 private:
  Cyclotomic(int level, std::vector<int64_t> num, int64_t den);
  Cyclotomic lifted(int level) const;
  void normalize();

  int level_ = 1;
  std::vector<int64_t> num_;
  int64_t den_ = 1;
};

/// Euler's totient.
int euler_phi(int n);

}  // namespace weylqubit
