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

#include <cstdint>
#include <random>

#include "weylqubit/algebra.hpp"

namespace weylqubit {

using Rng = std::mt19937_64;

/// Angle p/q (units of pi) with q drawn from {1, 2, 3, 4, 6} and p in [0, 2q).
Rational random_angle(Rng& rng);
/// Angle avoiding {0, pi}.
Rational random_generic_angle(Rng& rng);
/// Nonzero exact scalar: small rational magnitude times a random rational phase.
Scalar random_scalar(Rng& rng);
/// Sum of up to `max_terms` random words with ell in [-max_ell, max_ell].
AlgebraElement random_element(Rng& rng, int max_terms, int64_t max_ell = 3);
AlgebraElement random_word(Rng& rng, int64_t max_ell = 3);

}  // namespace weylqubit
