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

#include "weylqubit/scalar.hpp"

#include <sstream>

namespace weylqubit {

const Cyclotomic& Scalar::exact() const {
  if (!is_exact()) throw UsageError("float-mode scalar has no exact value");
  return std::get<Cyclotomic>(value_);
}

std::complex<double> Scalar::to_complex() const {
  if (is_exact()) return std::get<Cyclotomic>(value_).to_complex();
  return std::get<std::complex<double>>(value_);
}

bool Scalar::is_zero(double abs_tol) const {
  if (is_exact()) return std::get<Cyclotomic>(value_).is_zero();
  return std::abs(std::get<std::complex<double>>(value_)) <= abs_tol;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(-std::get<Cyclotomic>(value_));
  return Scalar(-std::get<std::complex<double>>(value_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(a.exact() + b.exact());
  return Scalar(a.to_complex() + b.to_complex());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(a.exact() * b.exact());
  return Scalar(a.to_complex() * b.to_complex());
}

Scalar Scalar::conj() const {
  if (is_exact()) return Scalar(std::get<Cyclotomic>(value_).conj());
  return Scalar(std::conj(std::get<std::complex<double>>(value_)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.is_exact() || !b.is_exact()) throw UsageError("exact comparison of float-mode scalars requires a tolerance");
  return a.exact() == b.exact();
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<Cyclotomic>(value_).str();
  const auto z = std::get<std::complex<double>>(value_);
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)~";
  return os.str();
}

}  // namespace weylqubit
