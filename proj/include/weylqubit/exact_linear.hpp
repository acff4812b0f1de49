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

#include <vector>

#include "weylqubit/algebra.hpp"

namespace weylqubit {

/// Dense matrix over the exact scalar field, row-major.
using ExactMatrix = std::vector<std::vector<Cyclotomic>>;

/// Coordinates of each column on the union of Weyl keys. A column may consist
/// of several elements (stacked blocks); all columns must have the same number
/// of blocks. Float-mode input raises UsageError.
ExactMatrix coefficient_matrix(const std::vector<std::vector<AlgebraElement>>& columns);

/// Rank by fraction-free Gaussian elimination (no field inverses needed).
size_t exact_rank(ExactMatrix m);
size_t exact_rank(const std::vector<AlgebraElement>& columns);

/// target in span_C(basis), decided exactly.
bool in_exact_span(const AlgebraElement& target, const std::vector<AlgebraElement>& basis);

}  // namespace weylqubit
