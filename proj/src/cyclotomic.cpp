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

#include "weylqubit/cyclotomic.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace weylqubit {
namespace {

using Wide = __int128;
using Poly = std::vector<int64_t>;
using WidePoly = std::vector<Wide>;

Wide wide_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("int128 overflow in cyclotomic arithmetic");
  return r;
}

Wide wide_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("int128 overflow in cyclotomic arithmetic");
  return r;
}

// Exact division of integer polynomials by a monic divisor (low-to-high order).
Poly divide_monic(const Poly& dividend, const Poly& divisor) {
  Poly rem = dividend;
  const size_t dd = divisor.size() - 1;
  Poly quot(rem.size() - dd, 0);
  for (size_t k = rem.size(); k-- > dd;) {
    int64_t c = rem[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; ++j) rem[k - dd + j] = checked::sub(rem[k - dd + j], checked::mul(c, divisor[j]));
  }
  return quot;
}

// Function-local statics: phases may be built during static initialization elsewhere.
std::mutex& poly_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<int, std::shared_ptr<const Poly>>& poly_cache() {
  static std::unordered_map<int, std::shared_ptr<const Poly>> cache;
  return cache;
}

std::shared_ptr<const Poly> cyclotomic_polynomial(int n) {
  auto& g_poly_mutex = poly_mutex();
  auto& g_poly_cache = poly_cache();
  {
    std::lock_guard<std::mutex> lock(g_poly_mutex);
    auto it = g_poly_cache.find(n);
    if (it != g_poly_cache.end()) return it->second;
  }
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, *cyclotomic_polynomial(d));
  }
  auto shared = std::make_shared<const Poly>(std::move(p));
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  return g_poly_cache.emplace(n, shared).first->second;
}

// Reduce in place modulo the monic cyclotomic polynomial of the given level.
void reduce(WidePoly& p, const Poly& phi_poly) {
  const size_t deg = phi_poly.size() - 1;
  for (size_t k = p.size(); k-- > deg;) {
    Wide c = p[k];
    if (c == 0) continue;
    for (size_t j = 0; j <= deg; ++j) p[k - deg + j] = wide_add(p[k - deg + j], -wide_mul(c, phi_poly[j]));
  }
  p.resize(deg);
}

int checked_level(int64_t level) {
  if (level > Cyclotomic::kMaxLevel) {
    throw CapacityError("cyclotomic level " + std::to_string(level) + " exceeds cap " +
                        std::to_string(Cyclotomic::kMaxLevel));
  }
  return static_cast<int>(level);
}

int lcm_level(int a, int b) { return checked_level(std::lcm(static_cast<int64_t>(a), static_cast<int64_t>(b))); }

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic(const Rational& r) : level_(1), num_{r.num()}, den_(r.den()) {}

Cyclotomic::Cyclotomic(int level, std::vector<int64_t> num, int64_t den)
    : level_(level), num_(std::move(num)), den_(den) {
  normalize();
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = checked::sub(0, den_);
    for (auto& n : num_) n = checked::sub(0, n);
  }
  int64_t g = den_;
  bool all_zero = true;
  for (int64_t n : num_) {
    g = std::gcd(g, n);
    all_zero = all_zero && n == 0;
  }
  if (all_zero) {
    level_ = 1;
    num_.assign(1, 0);
    den_ = 1;
    return;
  }
  if (g > 1) {
    for (auto& n : num_) n /= g;
    den_ /= g;
  }
}

Cyclotomic Cyclotomic::lifted(int level) const {
  if (level == level_) return *this;
  const auto phi_poly = cyclotomic_polynomial(level);
  const int stride = level / level_;
  WidePoly p(static_cast<size_t>(stride) * num_.size() + 1, 0);
  for (size_t i = 0; i < num_.size(); ++i) p[i * stride] = num_[i];
  if (p.size() < phi_poly->size()) p.resize(phi_poly->size(), 0);
  reduce(p, *phi_poly);
  std::vector<int64_t> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = checked::narrow(p[i]);
  Cyclotomic result;
  result.level_ = level;
  result.num_ = std::move(out);
  result.den_ = den_;
  return result;
}

Cyclotomic Cyclotomic::phase(const Rational& r) {
  // e^{i pi p/q} = zeta_{2q}^p
  const int level = checked_level(checked::mul(2, r.den()));
  int64_t e = r.num() % level;
  if (e < 0) e += level;
  const auto phi_poly = cyclotomic_polynomial(level);
  WidePoly p(std::max<size_t>(static_cast<size_t>(e) + 1, phi_poly->size()), 0);
  p[e] = 1;
  reduce(p, *phi_poly);
  std::vector<int64_t> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = checked::narrow(p[i]);
  return Cyclotomic(level, std::move(out), 1);
}

Cyclotomic Cyclotomic::cos_pi(const Rational& r) {
  return (phase(r) + phase(-r)) * Cyclotomic(Rational(1, 2));
}

Cyclotomic Cyclotomic::sin_pi(const Rational& r) {
  return (phase(r) - phase(-r)) * (phase(Rational(3, 2)) * Cyclotomic(Rational(1, 2)));
}

bool Cyclotomic::is_zero() const {
  for (int64_t n : num_)
    if (n != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& n : r.num_) n = checked::sub(0, n);
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int level = lcm_level(a.level_, b.level_);
  const Cyclotomic x = a.lifted(level);
  const Cyclotomic y = b.lifted(level);
  const int64_t g = std::gcd(x.den_, y.den_);
  const int64_t fx = y.den_ / g;
  const int64_t fy = x.den_ / g;
  std::vector<int64_t> num(x.num_.size());
  for (size_t i = 0; i < num.size(); ++i) num[i] = checked::add(checked::mul(x.num_[i], fx), checked::mul(y.num_[i], fy));
  return Cyclotomic(level, std::move(num), checked::mul(x.den_, fx));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return Cyclotomic();
  const int level = lcm_level(a.level_, b.level_);
  const Cyclotomic x = a.lifted(level);
  const Cyclotomic y = b.lifted(level);
  WidePoly p(x.num_.size() + y.num_.size() - 1, 0);
  for (size_t i = 0; i < x.num_.size(); ++i) {
    if (x.num_[i] == 0) continue;
    for (size_t j = 0; j < y.num_.size(); ++j) p[i + j] = wide_add(p[i + j], wide_mul(x.num_[i], y.num_[j]));
  }
  const auto phi_poly = cyclotomic_polynomial(level);
  if (p.size() < phi_poly->size()) p.resize(phi_poly->size(), 0);
  reduce(p, *phi_poly);
  // Remove the common factor before narrowing so that large intermediates survive.
  Wide g = static_cast<Wide>(x.den_) * y.den_;
  for (Wide v : p) {
    Wide u = v < 0 ? -v : v;
    while (u != 0) {
      Wide t = g % u;
      g = u;
      u = t;
    }
  }
  if (g <= 0) g = 1;
  std::vector<int64_t> num(p.size());
  for (size_t i = 0; i < p.size(); ++i) num[i] = checked::narrow(p[i] / g);
  const int64_t den = checked::narrow(static_cast<Wide>(x.den_) * y.den_ / g);
  return Cyclotomic(level, std::move(num), den);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.level_ == b.level_) return a.den_ == b.den_ && a.num_ == b.num_;
  const int level = lcm_level(a.level_, b.level_);
  const Cyclotomic x = a.lifted(level);
  const Cyclotomic y = b.lifted(level);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) return *this;
  const auto phi_poly = cyclotomic_polynomial(level_);
  WidePoly p(static_cast<size_t>(level_), 0);
  for (size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const size_t e = (static_cast<size_t>(level_) - i) % static_cast<size_t>(level_);
    p[e] = wide_add(p[e], num_[i]);
  }
  reduce(p, *phi_poly);
  std::vector<int64_t> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = checked::narrow(p[i]);
  return Cyclotomic(level_, std::move(out), den_);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc = 0.0;
  for (size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(level_);
    acc += static_cast<double>(num_[i]) * std::polar(1.0, angle);
  }
  return acc / static_cast<double>(den_);
}

std::vector<PhaseComponent> Cyclotomic::components() const {
  std::vector<PhaseComponent> out;
  for (size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational phase(checked::mul(2, static_cast<int64_t>(i)), level_);
    if (num_[i] < 0) phase += Rational(1);
    if (phase >= Rational(2)) phase -= Rational(2);
    out.push_back({Rational(num_[i] < 0 ? checked::sub(0, num_[i]) : num_[i], den_), phase});
  }
  return out;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return Rational(num_[0], den_).str();
  std::ostringstream os;
  bool first = true;
  for (const auto& c : components()) {
    if (!first) os << " + ";
    first = false;
    if (c.magnitude != Rational(1)) os << c.magnitude.str() << "*";
    if (c.phase == Rational(1, 2)) {
      os << "i";
    } else if (c.phase == Rational(3, 2)) {
      os << "(-i)";
    } else if (c.phase == Rational(1)) {
      os << "(-1)";
    } else if (c.phase.is_zero()) {
      os << "1";
    } else {
      os << "e^(i*pi*" << c.phase.str() << ")";
    }
  }
  return os.str();
}

}  // namespace weylqubit
