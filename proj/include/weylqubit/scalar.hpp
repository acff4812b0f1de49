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
#include <string>
#include <variant>

#include "weylqubit/cyclotomic.hpp"

namespace weylqubit {

/// Coefficient of a Weyl word: exact cyclotomic value, or a flagged
/// double-precision fallback. Any arithmetic touching a float operand yields a
/// float result.
class Scalar {
 public:
  Scalar() : value_(Cyclotomic()) {}
  Scalar(const Cyclotomic& c) : value_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r) : value_(Cyclotomic(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int64_t n) : value_(Cyclotomic(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int n) : value_(Cyclotomic(static_cast<int64_t>(n))) {}  // NOLINT(google-explicit-constructor)
  Scalar(std::complex<double> z) : value_(z) {}  // NOLINT(google-explicit-constructor)

  /// e^{i pi r}.
  static Scalar phase(const Rational& r) { return Scalar(Cyclotomic::phase(r)); }
  static Scalar imag_unit() { return Scalar(Cyclotomic::imag_unit()); }

  bool is_exact() const { return std::holds_alternative<Cyclotomic>(value_); }
  const Cyclotomic& exact() const;
  std::complex<double> to_complex() const;
  /// Exact: value is 0. Float: magnitude <= abs_tol.
  bool is_zero(double abs_tol = 0.0) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar conj() const;

  /// Exact equality; throws UsageError if either side is float.
  friend bool operator==(const Scalar& a, const Scalar& b);
  bool approx_equal(const Scalar& o, double tol) const { return std::abs(to_complex() - o.to_complex()) <= tol; }

  std::string str() const;

 private:
  std::variant<Cyclotomic, std::complex<double>> value_;
};

}  // namespace weylqubit
