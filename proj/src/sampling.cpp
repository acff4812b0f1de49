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

#include "weylqubit/sampling.hpp"

#include <array>

namespace weylqubit {

namespace {

constexpr std::array<int64_t, 5> kDenominators = {1, 2, 3, 4, 6};

int64_t uniform(Rng& rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

}  // namespace

Rational random_angle(Rng& rng) {
  const int64_t q = kDenominators[static_cast<size_t>(uniform(rng, 0, kDenominators.size() - 1))];
  return Rational(uniform(rng, 0, 2 * q - 1), q);
}

Rational random_generic_angle(Rng& rng) {
  for (;;) {
    Rational r = random_angle(rng);
    if (r.den() != 1) return r;
  }
}

Scalar random_scalar(Rng& rng) {
  const Rational mag(uniform(rng, 1, 5), uniform(rng, 1, 4));
  return Scalar(Cyclotomic(mag) * Cyclotomic::phase(random_angle(rng)));
}

AlgebraElement random_word(Rng& rng, int64_t max_ell) {
  return AlgebraElement::word_raw(random_angle(rng), uniform(rng, -max_ell, max_ell), random_scalar(rng));
}

AlgebraElement random_element(Rng& rng, int max_terms, int64_t max_ell) {
  AlgebraElement out;
  const int n = static_cast<int>(uniform(rng, 1, max_terms));
  for (int i = 0; i < n; ++i) out += random_word(rng, max_ell);
  return out;
}

}  // namespace weylqubit
