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
#include <vector>

#include "weylqubit/algebra.hpp"
#include "weylqubit/report.hpp"

namespace weylqubit {

/// P^(d)_l = (1/d) sum_j U(2 pi j/d) e^{-2 pi i j l/d}; selects m = l (mod d).
AlgebraElement projector(int64_t d, int64_t ell);
/// Q_{l l'} = V^{l mod d} P^(d)_d (V*)^{l' mod d}, labels 1..d.
AlgebraElement matrix_unit(int64_t d, int64_t l, int64_t lp);

struct QuditBasis {
  int64_t d = 0;
  std::vector<AlgebraElement> projectors;          ///< index l-1
  std::vector<std::vector<AlgebraElement>> units;  ///< units[l-1][lp-1]
};

QuditBasis build_qudit(int64_t d);

/// Projector and matrix-unit relations, oracle diagonal check and, for d = 2,
/// equality of span{Q} with the qubit subalgebra.
Report verify_qudit(int64_t d, int64_t l_max = 32, double tol = 1e-12);

}  // namespace weylqubit
