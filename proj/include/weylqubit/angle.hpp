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
#include <string>

#include "weylqubit/rational.hpp"

namespace weylqubit {

/// Angle (num/den)*pi, reduced and normalized into [0, 2pi).
class RationalAngle {
 public:
  RationalAngle() = default;
  /// Value in units of pi; any rational is accepted and wrapped into [0, 2).
  explicit RationalAngle(const Rational& units_of_pi) : value_(wrap(units_of_pi).second) {}
  RationalAngle(int64_t num, int64_t den) : RationalAngle(Rational(num, den)) {}

  /// Splits a raw angle (units of pi) into (k, a) with raw = a + 2k, a in [0, 2).
  static std::pair<int64_t, Rational> wrap(const Rational& units_of_pi);

  const Rational& units_of_pi() const { return value_; }
  int64_t num() const { return value_.num(); }
  int64_t den() const { return value_.den(); }
  double radians() const;
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
  friend std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b) {
    return a.value_ <=> b.value_;
  }

  std::string str() const { return value_.str(); }

 private:
  Rational value_;
};

}  // namespace weylqubit
