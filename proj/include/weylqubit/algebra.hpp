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

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "weylqubit/angle.hpp"
#include "weylqubit/scalar.hpp"

namespace weylqubit {

/// Index (theta, ell) of the Weyl word W(theta, ell) = e^{-i ell theta/2} U(theta) V^ell.
struct WeylKey {
  RationalAngle theta;
  int64_t ell = 0;

  friend bool operator==(const WeylKey&, const WeylKey&) = default;
  friend std::strong_ordering operator<=>(const WeylKey& a, const WeylKey& b) {
    if (auto c = a.theta <=> b.theta; c != 0) return c;
    return a.ell <=> b.ell;
  }
};

/// coeff * W(theta, ell).
struct WeylTerm {
  Scalar coeff = 1;
  RationalAngle theta;
  int64_t ell = 0;
};

/// Brings W(raw, ell) to canonical form: raw = theta + 2k pi gives
/// W(raw, ell) = (-1)^{k ell} W(theta, ell) with theta in [0, 2pi).
WeylTerm canonical_word(const Rational& raw_units_of_pi, int64_t ell, const Scalar& coeff = 1);

/// W(t,l) W(t',l') = e^{i(l' t - l t')/2} W(t + t', l + l'), wrapped canonically.
WeylTerm weyl_mul(const WeylTerm& a, const WeylTerm& b);

/// Finite linear combination of Weyl words in canonical form: at most one
/// term per key and no zero coefficients.
class AlgebraElement {
 public:
  using TermMap = std::map<WeylKey, Scalar>;
  /// Float-mode coefficients below this fraction of the largest one are dropped.
  static constexpr double kFloatZeroRelTol = 1e-12;

  AlgebraElement() = default;

  static AlgebraElement identity() { return word(RationalAngle(), 0); }
  static AlgebraElement word(const RationalAngle& theta, int64_t ell, const Scalar& coeff = 1);
  /// Word with an arbitrary rational angle (units of pi), wrapped canonically.
  static AlgebraElement word_raw(const Rational& theta, int64_t ell, const Scalar& coeff = 1);
  static AlgebraElement from_term(const WeylTerm& t) { return word(t.theta, t.ell, t.coeff); }
  static AlgebraElement scalar(const Scalar& c) { return word(RationalAngle(), 0, c); }

  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool float_mode() const { return float_mode_; }
  /// Largest |ell| among the terms; 0 for the zero element.
  int64_t bandwidth() const;
  /// Coefficient of a key, zero if absent.
  Scalar coefficient(const WeylKey& key) const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const Scalar& c) { return c * a; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  /// Mark the element as float-mode (used when a float input was involved).
  void mark_float() { float_mode_ = true; }
  /// Inserts coeff * W(key), merging with an existing term.
  void accumulate(const WeylKey& key, const Scalar& coeff);
  /// Prunes float-mode coefficients that are negligible relative to the largest.
  void prune();

  std::string str() const;

 private:
  TermMap terms_;
  bool float_mode_ = false;
};

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }
inline AlgebraElement scale(const Scalar& c, const AlgebraElement& a) { return c * a; }
inline AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

/// Term-wise W(t,l)* = W(-t,-l) with conjugated coefficients.
AlgebraElement adjoint(const AlgebraElement& a);
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);
/// Integer power; negative exponents are taken of the adjoint (words only make
/// sense for unitaries, so callers pass unitary elements for p < 0).
AlgebraElement power(const AlgebraElement& a, int64_t p);

/// Exact equality of term maps. Throws UsageError if either side is float-mode.
bool equals(const AlgebraElement& a, const AlgebraElement& b);
/// Coefficient-wise |a - b| <= tol; usable in either mode.
bool equals_within(const AlgebraElement& a, const AlgebraElement& b, double tol);

}  // namespace weylqubit
