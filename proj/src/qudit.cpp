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

#include "weylqubit/qudit.hpp"

#include <string>

#include "weylqubit/exact_linear.hpp"
#include "weylqubit/oracle.hpp"
#include "weylqubit/qubit.hpp"
#include "weylqubit/sampling.hpp"

namespace weylqubit {

namespace {

void check_d(int64_t d) {
  if (d < 2) throw DomainError("qudit dimension must be >= 2, got " + std::to_string(d));
}

void check_label(int64_t d, int64_t l) {
  if (l < 1 || l > d) throw DomainError("qudit label " + std::to_string(l) + " outside 1.." + std::to_string(d));
}

int64_t mod(int64_t a, int64_t d) { return ((a % d) + d) % d; }

std::string pair_name(const std::string& stem, int64_t a, int64_t b) {
  return stem + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

AlgebraElement projector(int64_t d, int64_t ell) {
  check_d(d);
  check_label(d, ell);
  AlgebraElement out;
  const Scalar inv_d(Rational(1, d));
  for (int64_t j = 0; j < d; ++j) {
    out += AlgebraElement::word_raw(Rational(2 * j, d), 0, inv_d * Scalar::phase(Rational(-2 * j * ell, d)));
  }
  return out;
}

AlgebraElement matrix_unit(int64_t d, int64_t l, int64_t lp) {
  check_label(d, l);
  check_label(d, lp);
  const AlgebraElement v = AlgebraElement::word_raw(Rational(0), 1);
  return power(v, mod(l, d)) * projector(d, d) * power(v, -mod(lp, d));
}

QuditBasis build_qudit(int64_t d) {
  check_d(d);
  QuditBasis b;
  b.d = d;
  for (int64_t l = 1; l <= d; ++l) b.projectors.push_back(projector(d, l));
  b.units.assign(static_cast<size_t>(d), {});
  for (int64_t l = 1; l <= d; ++l)
    for (int64_t lp = 1; lp <= d; ++lp) b.units[static_cast<size_t>(l - 1)].push_back(matrix_unit(d, l, lp));
  return b;
}

Report verify_qudit(int64_t d, int64_t l_max, double tol) {
  const QuditBasis b = build_qudit(d);
  const auto& P = b.projectors;
  const auto& Q = b.units;
  const auto at = [](const auto& v, int64_t i) -> const auto& { return v[static_cast<size_t>(i)]; };
  Report rep("qudit d=" + std::to_string(d));
  const AlgebraElement id = AlgebraElement::identity();

  AlgebraElement sum;
  for (int64_t l = 0; l < d; ++l) {
    sum += at(P, l);
    rep.add_exact("P" + std::to_string(l + 1) + ".idempotent", equals(at(P, l) * at(P, l), at(P, l)));
    rep.add_exact("P" + std::to_string(l + 1) + ".self_adjoint", equals(adjoint(at(P, l)), at(P, l)));
    for (int64_t m = 0; m < d; ++m) {
      if (m == l) continue;
      rep.add_exact(pair_name("P.orthogonal", l + 1, m + 1), (at(P, l) * at(P, m)).is_zero());
    }
  }
  rep.add_exact("P.complete", equals(sum, id));

  // oracle: 0/1 diagonal selecting m = l (mod d)
  const Window w(l_max);
  double diag_res = 0.0;
  for (int64_t l = 1; l <= d; ++l) {
    const Eigen::MatrixXcd m = represent(at(P, l - 1), w).matrix;
    for (int64_t r = -l_max; r <= l_max; ++r) {
      for (int64_t c = -l_max; c <= l_max; ++c) {
        const double want = (r == c && mod(r - l, d) == 0) ? 1.0 : 0.0;
        diag_res = std::max(diag_res, std::abs(m(w.index(r), w.index(c)) - want));
      }
    }
  }
  rep.add_float("P.oracle_diagonal", diag_res, tol);

  const bool exhaustive = d <= 4;
  Rng rng(static_cast<uint64_t>(d));
  std::uniform_int_distribution<int64_t> idx(0, d - 1);
  bool table_ok = true;
  size_t checked = 0;
  auto check_product = [&](int64_t a, int64_t bb, int64_t c, int64_t dd) {
    const AlgebraElement lhs = at(at(Q, a), bb) * at(at(Q, c), dd);
    const bool ok = bb == c ? equals(lhs, at(at(Q, a), dd)) : lhs.is_zero();
    table_ok = table_ok && ok;
    ++checked;
  };
  if (exhaustive) {
    for (int64_t a = 0; a < d; ++a)
      for (int64_t bb = 0; bb < d; ++bb)
        for (int64_t c = 0; c < d; ++c)
          for (int64_t dd = 0; dd < d; ++dd) check_product(a, bb, c, dd);
  } else {
    for (int k = 0; k < 256; ++k) {
      const int64_t a = idx(rng), bb = idx(rng), dd = idx(rng);
      const int64_t c = k % 2 == 0 ? bb : idx(rng);
      check_product(a, bb, c, dd);
    }
  }
  ReportEntry t{exhaustive ? "Q.table(exhaustive)" : "Q.table(sampled)", std::to_string(checked) + " products",
                "delta table", table_ok ? Status::kPass : Status::kFail, Mode::kExact, table_ok ? 0.0 : 1.0, ""};
  rep.add(t);

  bool adj_ok = true;
  AlgebraElement diag;
  for (int64_t a = 0; a < d; ++a) {
    diag += at(at(Q, a), a);
    for (int64_t bb = 0; bb < d; ++bb) adj_ok = adj_ok && equals(adjoint(at(at(Q, a), bb)), at(at(Q, bb), a));
  }
  rep.add_exact("Q.adjoint", adj_ok);
  rep.add_exact("Q.diagonal_sum", equals(diag, id));

  if (d == 2) {
    const auto& g = generators();
    const std::vector<AlgebraElement> pauli = {g.identity, g.a1, g.a2, g.a3};
    const std::vector<AlgebraElement> qs = {at(at(Q, 0), 0), at(at(Q, 0), 1), at(at(Q, 1), 0), at(at(Q, 1), 1)};
    std::vector<AlgebraElement> both = pauli;
    both.insert(both.end(), qs.begin(), qs.end());
    const size_t rp = exact_rank(pauli), rq = exact_rank(qs), rb = exact_rank(both);
    rep.add_exact("d2.change_of_basis", rp == 4 && rq == 4 && rb == 4,
                  "rank(pauli)=" + std::to_string(rp) + " rank(Q)=" + std::to_string(rq),
                  "rank(both)=" + std::to_string(rb));
    const Block2& e = matrix_units();
    rep.add_exact("d2.Q22=a+a-", equals(at(at(Q, 1), 1), e[0][0]));
    rep.add_exact("d2.Q11=a-a+", equals(at(at(Q, 0), 0), e[1][1]));
    rep.add_exact("d2.Q21=a+", equals(at(at(Q, 1), 0), e[0][1]));
    rep.add_exact("d2.Q12=a-", equals(at(at(Q, 0), 1), e[1][0]));
  }
  return rep;
}

}  // namespace weylqubit
