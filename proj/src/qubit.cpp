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

#include "weylqubit/qubit.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "weylqubit/exact_linear.hpp"
#include "weylqubit/sampling.hpp"

namespace weylqubit {

namespace {

const Scalar kI = Scalar::imag_unit();

Rational half(const Rational& r) { return r * Rational(1, 2); }

std::string indexed(const std::string& stem, int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "[%03d]", i);
  return stem + buf;
}

// Numeric product of factor representations; independent of symbolic mul.
TruncatedOperator oracle_product(const std::vector<AlgebraElement>& factors, const Window& w) {
  TruncatedOperator out = identity_operator(w);
  for (const auto& f : factors) out = out * represent(f, w);
  return out;
}

int64_t total_bandwidth(const std::vector<AlgebraElement>& fs) {
  int64_t b = 0;
  for (const auto& f : fs) b += f.bandwidth();
  return b;
}

// Exact check of a symbolic identity lhs == rhs plus an oracle check of the
// factored lhs (sum of products) against rhs.
// Explicit interior margin requested by the caller; < 0 means derive it from bandwidths.
thread_local int64_t t_margin = -1;

struct MarginScope {
  explicit MarginScope(int64_t m) : saved(t_margin) { t_margin = m; }
  ~MarginScope() { t_margin = saved; }
  int64_t saved;
};

struct OracleSide {
  std::vector<std::pair<Scalar, std::vector<AlgebraElement>>> products;
};

void check_identity(Report& rep, const std::string& name, const AlgebraElement& lhs,
                    const AlgebraElement& rhs, const OracleSide& side, int64_t l_max, double tol) {
  const bool exact = equals(lhs, rhs);
  double residual = 0.0;
  if (l_max > 0) {
    const Window w(l_max);
    TruncatedOperator num{Eigen::MatrixXcd::Zero(w.dim(), w.dim()), w, 0};
    int64_t margin = rhs.bandwidth();
    for (const auto& [c, fs] : side.products) {
      TruncatedOperator p = oracle_product(fs, w);
      num.matrix += c.to_complex() * p.matrix;
      margin = std::max(margin, total_bandwidth(fs));
    }
    residual = interior_residual(num, represent(rhs, w), t_margin >= 0 ? t_margin : margin + 1);
  }
  ReportEntry e{name, lhs.str(), rhs.str(), Status::kFail, Mode::kExact, residual, ""};
  const bool numeric = residual <= tol;
  e.status = exact && numeric ? Status::kPass : Status::kFail;
  if (exact != numeric) e.note = exact ? "oracle disagrees" : "symbolic check failed, oracle agrees";
  else if (!exact) e.note = "symbolic and oracle both fail";
  rep.add(std::move(e));
}

OracleSide prod(std::vector<AlgebraElement> fs, const Scalar& c = 1) {
  return OracleSide{{{c, std::move(fs)}}};
}

OracleSide diff(std::vector<AlgebraElement> a, std::vector<AlgebraElement> b) {
  return OracleSide{{{1, std::move(a)}, {-1, std::move(b)}}};
}

AlgebraElement zero() { return {}; }

}  // namespace

// ---------------------------------------------------------------------------
// generators

QubitGenerators build_generators() {
  QubitGenerators g;
  g.identity = AlgebraElement::identity();
  g.a_plus = AlgebraElement::word_raw(Rational(0), -1, Scalar(Rational(1, 2))) +
             AlgebraElement::word_raw(Rational(1), -1, -kI * Scalar(Rational(1, 2)));
  g.a_minus = adjoint(g.a_plus);
  g.a1 = g.a_plus + g.a_minus;
  g.a2 = -kI * g.a_plus + kI * g.a_minus;
  g.a3 = AlgebraElement::word_raw(Rational(1), 0);
  return g;
}

const QubitGenerators& generators() {
  static const QubitGenerators g = build_generators();
  return g;
}

const Block2& matrix_units() {
  static const Block2 e = [] {
    const auto& g = generators();
    Block2 u;
    u[0][0] = g.a_plus * g.a_minus;
    u[1][1] = g.a_minus * g.a_plus;
    u[0][1] = g.a_plus;
    u[1][0] = g.a_minus;
    return u;
  }();
  return e;
}

Report verify_pauli(int64_t l_max, double tol, int64_t margin) {
  const MarginScope scope(margin);
  const auto& g = generators();
  const std::array<const AlgebraElement*, 3> s = {&g.a1, &g.a2, &g.a3};
  Report rep("pauli");
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      AlgebraElement rhs = j == k ? g.identity : zero();
      if (j != k) {
        const int l = 3 - j - k;
        // epsilon_{jkl}: +1 for cyclic (j,k,l)
        const bool cyclic = (k - j + 3) % 3 == 1;
        rhs = (cyclic ? kI : -kI) * *s[static_cast<size_t>(l)];
      }
      const std::string name = "a" + std::to_string(j + 1) + "*a" + std::to_string(k + 1);
      check_identity(rep, name, *s[static_cast<size_t>(j)] * *s[static_cast<size_t>(k)], rhs,
                     prod({*s[static_cast<size_t>(j)], *s[static_cast<size_t>(k)]}), l_max, tol);
    }
  }
  for (int j = 0; j < 3; ++j) {
    const auto& a = *s[static_cast<size_t>(j)];
    const std::string name = "adjoint(a" + std::to_string(j + 1) + ")";
    // oracle side: conjugate transpose of the represented generator
    const bool exact = equals(adjoint(a), a);
    const Window w(l_max);
    const TruncatedOperator ra = represent(a, w);
    const double residual = interior_residual(ra.adjoint(), ra, a.bandwidth() + 1);
    ReportEntry e{name, adjoint(a).str(), a.str(), Status::kFail, Mode::kExact, residual, ""};
    e.status = exact && residual <= tol ? Status::kPass : Status::kFail;
    rep.add(std::move(e));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// commutant

AlgebraElement u1(const Rational& theta) {
  const Cyclotomic e = Cyclotomic::phase(-theta);
  const Cyclotomic h(Rational(1, 2));
  return AlgebraElement::word_raw(theta, 0, h * (Cyclotomic(1) + e)) +
         AlgebraElement::word_raw(theta + Rational(1), 0, h * (Cyclotomic(1) - e));
}

AlgebraElement v1() { return AlgebraElement::word_raw(Rational(0), 2); }

AlgebraElement w1(const Rational& phi, int64_t ell) {
  return Scalar::phase(-(phi * Rational(ell))) * (u1(phi) * power(v1(), ell));
}

CommutantGenerators commutant_generators() {
  return {[](const Rational& t) { return u1(t); }, v1(),
          [](const Rational& p, int64_t l) { return w1(p, l); }};
}

Report verify_commutant(int samples, uint64_t seed, int64_t l_max, double tol, int64_t margin) {
  const MarginScope scope(margin);
  const auto& g = generators();
  Rng rng(seed);
  Report rep("commutant");
  const AlgebraElement id = g.identity;
  check_identity(rep, "u1(0)=1", u1(Rational(0)), id, prod({u1(Rational(0))}), l_max, tol);
  check_identity(rep, "u1(pi)=1", u1(Rational(1)), id, prod({u1(Rational(1))}), l_max, tol);
  std::uniform_int_distribution<int64_t> ell_dist(-4, 4);
  for (int i = 0; i < samples; ++i) {
    const Rational t = random_angle(rng);
    const Rational tp = random_angle(rng);
    const int64_t ell = ell_dist(rng);
    const AlgebraElement ut = u1(t);
    const AlgebraElement utp = u1(tp);
    check_identity(rep, indexed("group_law", i), ut * utp, u1(t + tp), prod({ut, utp}), l_max, tol);
    check_identity(rep, indexed("pi_periodic", i), u1(t + Rational(1)), ut, prod({u1(t + Rational(1))}), l_max,
                   tol);
    const AlgebraElement vl = power(v1(), ell);
    const Scalar ph = Scalar::phase(Rational(2 * ell) * t);
    check_identity(rep, indexed("weyl_relation", i), ut * vl, ph * (vl * ut),
                   OracleSide{{{1, {ut, vl}}, {-ph, {vl, ut}}, {ph, {vl, ut}}}}, l_max, tol);
    // t in [0, 2) covers both representatives phi and phi + pi
    const AlgebraElement w = w1(t, ell);
    const std::array<const AlgebraElement*, 3> s = {&g.a1, &g.a2, &g.a3};
    for (int k = 0; k < 3; ++k) {
      const auto& a = *s[static_cast<size_t>(k)];
      check_identity(rep, indexed("w1_commutes_a" + std::to_string(k + 1), i), commutator(w, a), zero(),
                     diff({w, a}, {a, w}), l_max, tol);
    }
  }
  return rep;
}

Report commutant_ratio_check(const Rational& theta, int64_t l_max, double tol) {
  const auto& g = generators();
  Report rep("commutant_ratio");
  const AlgebraElement c1 = AlgebraElement::word_raw(theta, 0);
  const AlgebraElement c2 = AlgebraElement::word_raw(theta + Rational(1), 0);
  const std::vector<std::vector<AlgebraElement>> cols = {
      {commutator(g.a_plus, c1), commutator(g.a_minus, c1)},
      {commutator(g.a_plus, c2), commutator(g.a_minus, c2)}};
  const ExactMatrix m = coefficient_matrix(cols);
  const size_t rank = exact_rank(m);
  const Cyclotomic e1 = Cyclotomic::cos_pi(half(theta));
  const Cyclotomic e2 = Cyclotomic::imag_unit() * Cyclotomic::sin_pi(half(theta));
  const RationalAngle ta(theta);
  const bool degenerate = ta.is_zero() || ta == RationalAngle(Rational(1));

  ReportEntry rank_entry{"solution_space_dim", std::to_string(2 - rank), "1", Status::kFail, Mode::kExact,
                         0.0, ""};
  rank_entry.status = rank == 1 ? Status::kPass : Status::kFail;
  if (degenerate) rank_entry.note = "degenerate angle: single-term solution";
  rep.add(rank_entry);

  // null vector (n1, n2) of the rank-1 system
  Cyclotomic n1(0), n2(0);
  if (rank == 1) {
    for (const auto& row : m) {
      if (!row[0].is_zero() || !row[1].is_zero()) {
        n1 = row[1];
        n2 = -row[0];
        break;
      }
    }
  }
  const bool ratio_ok = rank == 1 && n1 * e2 == n2 * e1;
  rep.add({"ratio", "(" + n1.str() + ") : (" + n2.str() + ")", "(" + e1.str() + ") : (" + e2.str() + ")",
           ratio_ok ? Status::kPass : Status::kFail, Mode::kExact, ratio_ok ? 0.0 : 1.0,
           degenerate ? "degenerate angle" : ""});

  // oracle: SVD null vector of the stacked numeric commutators
  const Window w(l_max);
  const int64_t margin = 2;
  const Eigen::Index lo = margin;
  const Eigen::Index n = w.dim() - 2 * margin;
  Eigen::MatrixXcd stack(2 * n * n, 2);
  for (int col = 0; col < 2; ++col) {
    const TruncatedOperator rc = represent(col == 0 ? c1 : c2, w);
    Eigen::Index off = 0;
    for (const AlgebraElement* a : {&g.a_plus, &g.a_minus}) {
      const TruncatedOperator ra = represent(*a, w);
      const Eigen::MatrixXcd cm = (ra.matrix * rc.matrix - rc.matrix * ra.matrix).block(lo, lo, n, n);
      stack.block(off, col, n * n, 1) = Eigen::Map<const Eigen::VectorXcd>(cm.data(), n * n);
      off += n * n;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stack, Eigen::ComputeFullV);
  const Eigen::VectorXcd nv = svd.matrixV().col(1);
  const std::complex<double> x1 = e1.to_complex(), x2 = e2.to_complex();
  const double cross = std::abs(nv(0) * x2 - nv(1) * x1) / std::sqrt(std::norm(x1) + std::norm(x2));
  const auto& sv = svd.singularValues();
  const double small = sv(0) > 0 ? sv(1) / sv(0) : 1.0;
  rep.add_float("oracle_null_dim", small, tol, "sigma_min/sigma_max", "0");
  rep.add_float("oracle_ratio", cross, tol);
  return rep;
}

// ---------------------------------------------------------------------------
// reconstruction

AlgebraElement reconstruct_u(const Rational& theta) {
  const auto& g = generators();
  const Rational h = half(theta);
  const AlgebraElement inner =
      Scalar(Cyclotomic::cos_pi(h)) * g.identity + (-kI * Scalar(Cyclotomic::sin_pi(h))) * g.a3;
  return Scalar::phase(h) * (u1(theta) * inner);
}

AlgebraElement reconstruct_v() {
  const auto& g = generators();
  return g.a_plus * v1() + g.a_minus;
}

WeylPairReconstruction reconstruct_weyl_pair() {
  return {[](const Rational& t) { return reconstruct_u(t); }, reconstruct_v()};
}

Report verify_reconstruction(int samples, uint64_t seed) {
  const auto& g = generators();
  Report rep("reconstruction");
  const int64_t lm = 16;
  const double tol = 1e-12;
  check_identity(rep, "V=a+V1+a-", reconstruct_v(), AlgebraElement::word_raw(Rational(0), 1),
                 OracleSide{{{1, {g.a_plus, v1()}}, {1, {g.a_minus}}}}, lm, tol);
  auto u_side = [&](const Rational& t) {
    const Rational h = half(t);
    const Scalar ph = Scalar::phase(h);
    return OracleSide{{{ph * Scalar(Cyclotomic::cos_pi(h)), {u1(t)}},
                       {ph * (-kI) * Scalar(Cyclotomic::sin_pi(h)), {u1(t), g.a3}}}};
  };
  check_identity(rep, "U(0)=1", reconstruct_u(Rational(0)), g.identity, u_side(Rational(0)), lm, tol);
  check_identity(rep, "U(pi)=a3", reconstruct_u(Rational(1)), g.a3, u_side(Rational(1)), lm, tol);
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const Rational t = random_angle(rng);
    check_identity(rep, indexed("U(theta)", i), reconstruct_u(t), AlgebraElement::word_raw(t, 0), u_side(t),
                   lm, tol);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// nest isomorphism

AlgebraElement nest_iso(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [key, c] : a.terms()) out += c * w1(half(key.theta.units_of_pi()), key.ell);
  if (a.float_mode()) out.mark_float();
  return out;
}

AlgebraElement nest_iso_power(const AlgebraElement& a, int k) {
  AlgebraElement out = a;
  for (int i = 0; i < k; ++i) out = nest_iso(out);
  return out;
}

// ---------------------------------------------------------------------------
// split

namespace {

size_t term_count(const Block2& b) {
  size_t n = 0;
  for (const auto& row : b)
    for (const auto& x : row) n += x.size();
  return n;
}

}  // namespace

QubitDecomposition split(const AlgebraElement& a, size_t term_cap) {
  if (a.float_mode()) throw UsageError("split requires an exact-mode element");
  QubitDecomposition d;
  for (const auto& [key, c] : a.terms()) {
    const Rational th = key.theta.units_of_pi();
    const int64_t ell = key.ell;
    for (int64_t s = 0; s < 2; ++s) {
      const int64_t t = s + ell;
      const int64_t sp = ((t % 2) + 2) % 2;
      const int64_t j = (t - sp) / 2;
      // W(th,ell)|2k+s> = e^{i pi th (j + sp - ell/2)} (|sp> (x) W(2 th, j)|k>)
      const Rational ph = th * (Rational(j + sp) - Rational(ell, 2));
      d.preimage[static_cast<size_t>(sp)][static_cast<size_t>(s)] +=
          AlgebraElement::word_raw(th * Rational(2), j, c * Scalar::phase(ph));
    }
    if (term_count(d.preimage) > term_cap) {
      throw CapacityError("split: " + std::to_string(term_count(d.preimage)) + " terms exceed cap " +
                          std::to_string(term_cap) + " after processing term " + key.theta.str() + "," +
                          std::to_string(ell));
    }
  }
  for (size_t r = 0; r < 2; ++r)
    for (size_t c = 0; c < 2; ++c) d.blocks[r][c] = nest_iso(d.preimage[r][c]);
  return d;
}

AlgebraElement recombine(const QubitDecomposition& d) {
  const Block2& e = matrix_units();
  AlgebraElement out;
  for (size_t r = 0; r < 2; ++r)
    for (size_t c = 0; c < 2; ++c) out += e[r][c] * d.blocks[r][c];
  return out;
}

bool blocks_in_commutant(const QubitDecomposition& d) {
  const auto& g = generators();
  for (const auto& row : d.blocks) {
    for (const auto& b : row) {
      for (const AlgebraElement* a : {&g.a1, &g.a2, &g.a3}) {
        if (!commutator(b, *a).is_zero()) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// iterated extraction

AlgebraElement nested_matrix_unit(int level, int r, int c) {
  if (level < 1) throw DomainError("nested_matrix_unit: level must be >= 1");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, AlgebraElement> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(level, r, c);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  AlgebraElement u = nest_iso_power(matrix_units()[static_cast<size_t>(r)][static_cast<size_t>(c)], level - 1);
  cache.emplace(key, u);
  return u;
}

ExtractionTree extract_qubits(const AlgebraElement& a, int n, size_t term_cap) {
  if (n < 1) throw DomainError("extract_qubits: n must be >= 1");
  if (n > 4) throw CapacityError("extract_qubits: n > 4 exceeds the supported depth");
  const QubitDecomposition d = split(a, term_cap);
  const size_t dim = size_t{1} << n;
  ExtractionTree t;
  t.depth = n;
  t.preimage.assign(dim, std::vector<AlgebraElement>(dim));
  if (n == 1) {
    for (size_t r = 0; r < 2; ++r)
      for (size_t c = 0; c < 2; ++c) t.preimage[r][c] = d.preimage[r][c];
  } else {
    const size_t sub = dim / 2;
    size_t terms = 0;
    for (size_t r = 0; r < 2; ++r) {
      for (size_t c = 0; c < 2; ++c) {
        const ExtractionTree st = extract_qubits(d.preimage[r][c], n - 1, term_cap);
        for (size_t i = 0; i < sub; ++i) {
          for (size_t j = 0; j < sub; ++j) {
            t.preimage[r * sub + i][c * sub + j] = st.preimage[i][j];
            terms += st.preimage[i][j].size();
          }
        }
      }
    }
    if (terms > term_cap) {
      throw CapacityError("extract_qubits: " + std::to_string(terms) + " terms exceed cap " +
                          std::to_string(term_cap) + " at depth " + std::to_string(n));
    }
  }
  t.blocks.assign(dim, std::vector<AlgebraElement>(dim));
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) t.blocks[r][c] = nest_iso_power(t.preimage[r][c], n);
  return t;
}

AlgebraElement recombine(const ExtractionTree& t) {
  const size_t dim = size_t{1} << t.depth;
  AlgebraElement out;
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < dim; ++c) {
      if (t.blocks[r][c].is_zero()) continue;
      AlgebraElement unit = AlgebraElement::identity();
      for (int k = 1; k <= t.depth; ++k) {
        const int shift = t.depth - k;
        unit = unit * nested_matrix_unit(k, static_cast<int>((r >> shift) & 1), static_cast<int>((c >> shift) & 1));
      }
      out += unit * t.blocks[r][c];
    }
  }
  return out;
}

Report verify_tensor(int samples, uint64_t seed) {
  Report rep("tensor");
  const auto& g = generators();
  auto add_case = [&](const std::string& name, const AlgebraElement& a) {
    const QubitDecomposition d = split(a);
    rep.add_exact(name + ".roundtrip", equals(recombine(d), a), recombine(d).str(), a.str());
    rep.add_exact(name + ".commutant", blocks_in_commutant(d));
  };
  add_case("identity", g.identity);
  add_case("V", AlgebraElement::word_raw(Rational(0), 1));
  add_case("W(pi/3,2)", AlgebraElement::word_raw(Rational(1, 3), 2));
  add_case("a3", g.a3);
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) add_case(indexed("random", i), random_element(rng, 6));
  return rep;
}

Report verify_extraction(int random_samples, uint64_t seed) {
  Report rep("extraction");
  const auto& g = generators();
  const std::vector<std::pair<std::string, AlgebraElement>> words = {
      {"identity", g.identity},
      {"V", AlgebraElement::word_raw(Rational(0), 1)},
      {"a3", g.a3},
      {"W(pi/3,2)", AlgebraElement::word_raw(Rational(1, 3), 2)},
      {"W(3pi/4,-3)", AlgebraElement::word_raw(Rational(3, 4), -3)},
  };
  for (int n = 1; n <= 3; ++n) {
    for (const auto& [name, a] : words) {
      const ExtractionTree t = extract_qubits(a, n);
      rep.add_exact(name + ".n" + std::to_string(n), equals(recombine(t), a));
    }
  }
  Rng rng(seed);
  for (int i = 0; i < random_samples; ++i) {
    AlgebraElement a;
    while (a.size() < 3) a += random_word(rng);
    rep.add_exact(indexed("random3.n2", i), equals(recombine(extract_qubits(a, 2)), a));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// factor

int64_t joint_commutant_dimension(const FactorOptions& opt) {
  const Window w(opt.l_max);
  const auto& g = generators();
  std::vector<TruncatedOperator> gens;
  if (opt.use_qubit_generators) {
    for (const AlgebraElement* a : {&g.a1, &g.a2, &g.a3}) gens.push_back(represent(*a, w));
  }
  if (opt.use_commutant_generators) {
    gens.push_back(represent(u1(Rational(1, 40)), w));
    gens.push_back(represent(v1(), w));
  }
  if (gens.empty()) throw UsageError("joint_commutant_dimension: no generators selected");
  int64_t bw_g = 0;
  for (const auto& op : gens) bw_g = std::max(bw_g, op.bandwidth);

  const int64_t lm = opt.l_max, b = opt.bandwidth;
  std::map<std::pair<int64_t, int64_t>, Eigen::Index> unknown;
  for (int64_t n = -lm; n <= lm; ++n)
    for (int64_t m = std::max(-lm, n - b); m <= std::min(lm, n + b); ++m)
      unknown.emplace(std::make_pair(n, m), static_cast<Eigen::Index>(unknown.size()));
  auto x_index = [&](int64_t n, int64_t m) -> Eigen::Index {
    auto it = unknown.find({n, m});
    return it == unknown.end() ? -1 : it->second;
  };

  // constraint rows (G X - X G)(n, m) = 0 wherever every summand is in the window
  std::vector<Eigen::VectorXcd> rows;
  const int64_t inner = lm - bw_g;
  for (const auto& op : gens) {
    const auto& gm = op.matrix;
    for (int64_t n = -inner; n <= inner; ++n) {
      for (int64_t m = std::max(-inner, n - b - bw_g); m <= std::min(inner, n + b + bw_g); ++m) {
        Eigen::VectorXcd row = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(unknown.size()));
        for (int64_t k = n - bw_g; k <= n + bw_g; ++k) {
          const Eigen::Index xi = x_index(k, m);
          if (xi >= 0) row(xi) += gm(w.index(n), w.index(k));
        }
        for (int64_t k = m - bw_g; k <= m + bw_g; ++k) {
          const Eigen::Index xi = x_index(n, k);
          if (xi >= 0) row(xi) -= gm(w.index(k), w.index(m));
        }
        if (row.cwiseAbs().maxCoeff() > 0) rows.push_back(std::move(row));
      }
    }
  }
  Eigen::MatrixXcd c(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(unknown.size()));
  for (size_t i = 0; i < rows.size(); ++i) c.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(c, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = opt.tol * sv(0);
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index i = 0; i < c.cols(); ++i) {
    if (i >= sv.size() || sv(i) <= cutoff) null_cols.push_back(i);
  }
  if (null_cols.empty()) return 0;

  // restrict the null space to interior unknowns
  const int64_t margin = b + bw_g;
  std::vector<Eigen::Index> interior;
  for (const auto& [nm, idx] : unknown) {
    if (std::abs(nm.first) <= lm - margin && std::abs(nm.second) <= lm - margin) interior.push_back(idx);
  }
  Eigen::MatrixXcd proj(static_cast<Eigen::Index>(interior.size()), static_cast<Eigen::Index>(null_cols.size()));
  for (size_t i = 0; i < interior.size(); ++i)
    for (size_t j = 0; j < null_cols.size(); ++j)
      proj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = svd.matrixV()(interior[i], null_cols[j]);
  Eigen::JacobiSVD<Eigen::MatrixXcd> psvd(proj);
  const auto& ps = psvd.singularValues();
  int64_t rank = 0;
  for (Eigen::Index i = 0; i < ps.size(); ++i) {
    if (ps(i) > opt.tol * std::max(1.0, ps(0))) ++rank;
  }
  return rank;
}

Report factor_check(const FactorOptions& opt) {
  const auto& g = generators();
  Report rep("factor");
  // c0 1 + sum c_j a_j commuting with a1, a2: the identity column vanishes and
  // the a_j columns are independent, so c1 = c2 = c3 = 0
  std::vector<std::vector<AlgebraElement>> cols;
  for (const AlgebraElement* a : {&g.a1, &g.a2, &g.a3}) cols.push_back({commutator(*a, g.a1), commutator(*a, g.a2)});
  const size_t rank = exact_rank(coefficient_matrix(cols));
  rep.add_exact("center.pauli_coefficients_vanish", rank == 3, "rank " + std::to_string(rank), "3");
  rep.add_exact("center.identity_accepted",
                commutator(g.identity, g.a1).is_zero() && commutator(g.identity, g.a2).is_zero());
  rep.add_exact("center.a3_rejected", !commutator(g.a3, g.a1).is_zero());

  // W(pi,0) never occurs as a key of any U1(theta)
  bool key_absent = true;
  const WeylKey a3_key{RationalAngle(Rational(1)), 0};
  for (int64_t q = 1; q <= 12; ++q)
    for (int64_t p = 0; p < 2 * q; ++p) key_absent = key_absent && !u1(Rational(p, q)).terms().count(a3_key);
  rep.add_exact("center.a3_not_in_u1_keys", key_absent);
  std::vector<AlgebraElement> basis;
  for (int64_t p = 0; p < 8; ++p) basis.push_back(u1(Rational(p, 4)));
  rep.add_exact("center.a3_not_in_u1_span", !in_exact_span(g.a3, basis));

  const int64_t dim = joint_commutant_dimension(opt);
  ReportEntry e{"oracle.joint_commutant_dim", std::to_string(dim), "1", dim == 1 ? Status::kPass : Status::kFail,
                Mode::kFloat, static_cast<double>(std::abs(dim - 1)), ""};
  rep.add(e);
  return rep;
}

// ---------------------------------------------------------------------------
// predicates

Report structure_predicates(int samples, uint64_t seed) {
  const auto& g = generators();
  Report rep("structure");
  const Block2& e = matrix_units();
  bool units_ok = equals(e[0][0] + e[1][1], g.identity);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          const AlgebraElement lhs = e[static_cast<size_t>(a)][static_cast<size_t>(b)] *
                                     e[static_cast<size_t>(c)][static_cast<size_t>(d)];
          const AlgebraElement rhs = b == c ? e[static_cast<size_t>(a)][static_cast<size_t>(d)] : zero();
          units_ok = units_ok && equals(lhs, rhs);
        }
  rep.add_exact("i.identity_and_M2", units_ok && verify_pauli(16).all_pass());
  rep.add_exact("iii.totality", verify_reconstruction(samples / 2, seed).all_pass());
  rep.add_exact("iv.factor", factor_check().all_pass());

  Rng rng(seed);
  bool hom = true;
  for (int i = 0; i < samples; ++i) {
    const AlgebraElement a = random_word(rng), b = random_word(rng);
    hom = hom && equals(nest_iso(a * b), nest_iso(a) * nest_iso(b)) && equals(nest_iso(adjoint(a)), adjoint(nest_iso(a)));
    const AlgebraElement img = nest_iso(a);
    for (const AlgebraElement* s : {&g.a1, &g.a2, &g.a3}) hom = hom && commutator(img, *s).is_zero();
  }
  rep.add_exact("v.nest_isomorphism", hom);
  return rep;
}

Eigen::VectorXd l1_diagonal(const Window& w) {
  Eigen::VectorXd d(w.dim());
  for (int64_t l = -w.l_max; l <= w.l_max; ++l) {
    d(w.index(l)) = static_cast<double>(l >= 0 ? l / 2 : -((-l + 1) / 2));
  }
  return d;
}

}  // namespace weylqubit
