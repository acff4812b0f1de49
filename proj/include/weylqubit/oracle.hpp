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

#include <complex>
#include <cstdint>
#include <iosfwd>

#include <Eigen/Dense>

#include "weylqubit/algebra.hpp"

namespace weylqubit {

/// OAM values l in [-l_max, l_max]; basis index of l is l + l_max.
struct Window {
  int64_t l_max = 32;

  explicit Window(int64_t lmax = 32);
  Eigen::Index dim() const { return static_cast<Eigen::Index>(2 * l_max + 1); }
  Eigen::Index index(int64_t ell) const;
  bool contains(int64_t ell) const { return ell >= -l_max && ell <= l_max; }
};

/// Dense matrix of an element on a window (hard truncation, no wrap).
struct TruncatedOperator {
  Eigen::MatrixXcd matrix;
  Window window;
  int64_t bandwidth = 0;

  TruncatedOperator operator*(const TruncatedOperator& o) const;
  TruncatedOperator adjoint() const;
};

/// Column |m> of W(theta, ell) is e^{-i ell theta/2} e^{i(m+ell)theta} |m+ell>.
TruncatedOperator represent(const AlgebraElement& a, const Window& w);
TruncatedOperator identity_operator(const Window& w);

Eigen::VectorXcd basis_state(const Window& w, int64_t ell);

/// Largest |A - B| over rows and columns with |l| <= l_max - margin.
double interior_residual(const TruncatedOperator& a, const TruncatedOperator& b, int64_t margin);
bool interior_equal(const TruncatedOperator& a, const TruncatedOperator& b, int64_t margin,
                    double tol = 1e-12);

Eigen::VectorXcd apply(const TruncatedOperator& a, const Eigen::VectorXcd& v);

/// Plain-text dump: one line per non-zero entry "row_ell col_ell re im".
void dump_operator(std::ostream& os, const TruncatedOperator& a, double cutoff = 0.0);

}  // namespace weylqubit
