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

#include "weylqubit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace weylqubit {

Window::Window(int64_t lmax) : l_max(lmax) {
  if (lmax < 1) throw SizingError("window l_max must be positive, got " + std::to_string(lmax));
}

Eigen::Index Window::index(int64_t ell) const {
  if (!contains(ell)) throw SizingError("OAM value " + std::to_string(ell) + " outside window");
  return static_cast<Eigen::Index>(ell + l_max);
}

TruncatedOperator TruncatedOperator::operator*(const TruncatedOperator& o) const {
  if (window.l_max != o.window.l_max) throw SizingError("operator product on different windows");
  return {matrix * o.matrix, window, bandwidth + o.bandwidth};
}

TruncatedOperator TruncatedOperator::adjoint() const {
  return {matrix.adjoint(), window, bandwidth};
}

TruncatedOperator represent(const AlgebraElement& a, const Window& w) {
  const int64_t bw = a.bandwidth();
  if (bw >= w.dim()) {
    throw SizingError("element bandwidth " + std::to_string(bw) + " does not fit window l_max=" +
                      std::to_string(w.l_max));
  }
  TruncatedOperator op{Eigen::MatrixXcd::Zero(w.dim(), w.dim()), w, bw};
  for (const auto& [key, c] : a.terms()) {
    const double th = key.theta.radians();
    const std::complex<double> coeff = c.to_complex();
    const int64_t ell = key.ell;
    // exp(-i ell th/2) exp(i(m+ell) th) = exp(i th (m + ell/2))
    for (int64_t m = -w.l_max; m <= w.l_max; ++m) {
      const int64_t n = m + ell;
      if (!w.contains(n)) continue;
      const double ph = th * (static_cast<double>(m) + 0.5 * static_cast<double>(ell));
      op.matrix(w.index(n), w.index(m)) += coeff * std::polar(1.0, ph);
    }
  }
  return op;
}

TruncatedOperator identity_operator(const Window& w) {
  return {Eigen::MatrixXcd::Identity(w.dim(), w.dim()), w, 0};
}

Eigen::VectorXcd basis_state(const Window& w, int64_t ell) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(w.dim());
  v(w.index(ell)) = 1.0;
  return v;
}

double interior_residual(const TruncatedOperator& a, const TruncatedOperator& b, int64_t margin) {
  if (a.window.l_max != b.window.l_max) throw SizingError("interior comparison on different windows");
  const int64_t lm = a.window.l_max;
  if (margin >= lm || margin < 0) {
    throw SizingError("interior margin " + std::to_string(margin) + " invalid for l_max=" +
                      std::to_string(lm));
  }
  const Eigen::Index lo = static_cast<Eigen::Index>(margin);
  const Eigen::Index n = static_cast<Eigen::Index>(2 * (lm - margin) + 1);
  return (a.matrix.block(lo, lo, n, n) - b.matrix.block(lo, lo, n, n)).cwiseAbs().maxCoeff();
}

bool interior_equal(const TruncatedOperator& a, const TruncatedOperator& b, int64_t margin,
                    double tol) {
  return interior_residual(a, b, margin) <= tol;
}

Eigen::VectorXcd apply(const TruncatedOperator& a, const Eigen::VectorXcd& v) {
  if (v.size() != a.matrix.cols()) {
    throw SizingError("state dimension " + std::to_string(v.size()) + " does not match operator dimension " +
                      std::to_string(a.matrix.cols()));
  }
  return a.matrix * v;
}

void dump_operator(std::ostream& os, const TruncatedOperator& a, double cutoff) {
  const int64_t lm = a.window.l_max;
  os << "# l_max " << lm << " bandwidth " << a.bandwidth << "\n";
  for (Eigen::Index c = 0; c < a.matrix.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.matrix.rows(); ++r) {
      const auto z = a.matrix(r, c);
      if (std::abs(z) <= cutoff || z == std::complex<double>(0.0)) continue;
      os << (r - lm) << ' ' << (c - lm) << ' ' << z.real() << ' ' << z.imag() << "\n";
    }
  }
}

}  // namespace weylqubit
