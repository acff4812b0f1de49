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

#include "weylqubit/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace weylqubit {

WeylTerm canonical_word(const Rational& raw_units_of_pi, int64_t ell, const Scalar& coeff) {
  const auto [k, theta] = RationalAngle::wrap(raw_units_of_pi);
  // W(theta + 2k pi, ell) = e^{-i ell k pi} W(theta, ell)
  const bool flip = ((k % 2) != 0) && ((ell % 2) != 0);
  return WeylTerm{flip ? -coeff : coeff, RationalAngle(theta), ell};
}

WeylTerm weyl_mul(const WeylTerm& a, const WeylTerm& b) {
  const Rational& t1 = a.theta.units_of_pi();
  const Rational& t2 = b.theta.units_of_pi();
  const Rational phase = (t1 * Rational(b.ell) - t2 * Rational(a.ell)) / Rational(2);
  const int64_t ell = checked::add(a.ell, b.ell);
  return canonical_word(t1 + t2, ell, a.coeff * b.coeff * Scalar::phase(phase));
}

AlgebraElement AlgebraElement::word(const RationalAngle& theta, int64_t ell, const Scalar& coeff) {
  AlgebraElement e;
  e.accumulate(WeylKey{theta, ell}, coeff);
  return e;
}

AlgebraElement AlgebraElement::word_raw(const Rational& theta, int64_t ell, const Scalar& coeff) {
  return from_term(canonical_word(theta, ell, coeff));
}

int64_t AlgebraElement::bandwidth() const {
  int64_t bw = 0;
  for (const auto& [key, c] : terms_) bw = std::max<int64_t>(bw, std::llabs(key.ell));
  return bw;
}

Scalar AlgebraElement::coefficient(const WeylKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar() : it->second;
}

void AlgebraElement::accumulate(const WeylKey& key, const Scalar& coeff) {
  if (!coeff.is_exact()) float_mode_ = true;
  if (coeff.is_exact() && coeff.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_exact() && it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::prune() {
  if (!float_mode_) return;
  double largest = 0.0;
  for (const auto& [key, c] : terms_) largest = std::max(largest, std::abs(c.to_complex()));
  const double cutoff = kFloatZeroRelTol * largest;
  std::erase_if(terms_, [&](const auto& kv) { return !kv.second.is_exact() && std::abs(kv.second.to_complex()) <= cutoff; });
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  float_mode_ = float_mode_ || o.float_mode_;
  for (const auto& [key, c] : o.terms_) accumulate(key, c);
  prune();
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  float_mode_ = float_mode_ || o.float_mode_;
  for (const auto& [key, c] : o.terms_) accumulate(key, -c);
  prune();
  return *this;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement r;
  if (a.float_mode_ || !c.is_exact()) r.mark_float();
  for (const auto& [key, v] : a.terms_) r.accumulate(key, c * v);
  r.prune();
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  if (a.float_mode_ || b.float_mode_) r.mark_float();
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const WeylTerm t = weyl_mul(WeylTerm{ca, ka.theta, ka.ell}, WeylTerm{cb, kb.theta, kb.ell});
      r.accumulate(WeylKey{t.theta, t.ell}, t.coeff);
    }
  }
  r.prune();
  return r;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*W(" << key.theta.str() << "," << key.ell << ")";
  }
  return os.str();
}

AlgebraElement adjoint(const AlgebraElement& a) {
  AlgebraElement r;
  if (a.float_mode()) r.mark_float();
  for (const auto& [key, c] : a.terms()) {
    const WeylTerm t = canonical_word(-key.theta.units_of_pi(), checked::sub(0, key.ell), c.conj());
    r.accumulate(WeylKey{t.theta, t.ell}, t.coeff);
  }
  return r;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) { return a * b - b * a; }

AlgebraElement power(const AlgebraElement& a, int64_t p) {
  if (p < 0) return power(adjoint(a), -p);
  AlgebraElement result = AlgebraElement::identity();
  AlgebraElement base = a;
  while (p > 0) {
    if (p & 1) result = result * base;
    p >>= 1;
    if (p > 0) base = base * base;
  }
  return result;
}

bool equals(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.float_mode() || b.float_mode()) throw UsageError("equality of float-mode elements requires a tolerance");
  if (a.size() != b.size()) return false;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
  }
  return true;
}

bool equals_within(const AlgebraElement& a, const AlgebraElement& b, double tol) {
  AlgebraElement diff = a - b;
  for (const auto& [key, c] : diff.terms())
    if (std::abs(c.to_complex()) > tol) return false;
  return true;
}

}  // namespace weylqubit
