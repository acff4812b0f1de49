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

#include "weylqubit/angle.hpp"

#include <cctype>
#include <numbers>

namespace weylqubit {

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string body = text.substr(begin, end - begin);
  if (body.empty()) throw std::invalid_argument("empty rational literal");
  const size_t slash = body.find('/');
  auto parse_int = [&](const std::string& s) -> int64_t {
    size_t used = 0;
    int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational literal '" + text + "'");
    }
    if (used != s.size()) throw std::invalid_argument("malformed rational literal '" + text + "'");
    return v;
  };
  if (slash == std::string::npos) return Rational(parse_int(body));
  const int64_t den = parse_int(body.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(parse_int(body.substr(0, slash)), den);
}

std::pair<int64_t, Rational> RationalAngle::wrap(const Rational& units_of_pi) {
  const int64_t k = (units_of_pi / Rational(2)).floor();
  return {k, units_of_pi - Rational(checked::mul(2, k))};
}

double RationalAngle::radians() const { return value_.to_double() * std::numbers::pi; }

}  // namespace weylqubit
