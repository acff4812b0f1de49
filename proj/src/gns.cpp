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

#include "weylqubit/gns.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "weylqubit/qubit.hpp"

namespace weylqubit {

namespace {

using cd = std::complex<double>;

constexpr double kNormTol = 1e-12;

Window auto_window(int64_t radius, int64_t bandwidth) { return Window(std::max<int64_t>(radius + bandwidth + 1, 2)); }

const ReferenceState* as_pure(const State& s) { return std::get_if<ReferenceState>(&s); }

int64_t radius_of(const State& s) {
  return std::visit([](const auto& x) { return x.support_radius(); }, s);
}

bool even_pure(const State& s) {
  const ReferenceState* p = as_pure(s);
  return p != nullptr && p->even_support();
}

double get_number(const nlohmann::json& e, const char* key, size_t idx, bool required) {
  if (!e.contains(key)) {
    if (required) throw std::invalid_argument("entries[" + std::to_string(idx) + "]: missing '" + key + "'");
    return 0.0;
  }
  if (!e[key].is_number()) throw std::invalid_argument("entries[" + std::to_string(idx) + "]." + key + ": expected a number");
  return e[key].get<double>();
}

int64_t get_int(const nlohmann::json& e, const char* key, size_t idx) {
  if (!e.contains(key) || !e[key].is_number_integer()) {
    throw std::invalid_argument("entries[" + std::to_string(idx) + "]." + key + ": expected an integer");
  }
  return e[key].get<int64_t>();
}

// [X, R] = 0 for all R: dimension of the solution space.
int commutant_dim(const std::vector<Eigen::MatrixXcd>& ms, double tol) {
  if (ms.empty()) return 0;
  const Eigen::Index n = ms.front().rows();
  Eigen::MatrixXcd stack(static_cast<Eigen::Index>(ms.size()) * n * n, n * n);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  for (size_t k = 0; k < ms.size(); ++k) {
    // vec(RX - XR) = (I (x) R - R^T (x) I) vec(X)
    Eigen::MatrixXcd op(n * n, n * n);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b)
        op.block(a * n, b * n, n, n) = id(a, b) * ms[k] - ms[k](b, a) * id;
    stack.block(static_cast<Eigen::Index>(k) * n * n, 0, n * n, n * n) = op;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stack);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++rank;
  return static_cast<int>(n * n) - rank;
}

}  // namespace

// ---------------------------------------------------------------------------
// states

double ReferenceState::norm() const {
  double s = 0.0;
  for (const auto& [l, c] : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

ReferenceState ReferenceState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("cannot normalize the zero state");
  ReferenceState out;
  for (const auto& [l, c] : coeffs) out.coeffs[l] = c / n;
  return out;
}

int64_t ReferenceState::support_radius() const {
  int64_t r = 0;
  for (const auto& [l, c] : coeffs) r = std::max(r, std::abs(l));
  return r;
}

bool ReferenceState::even_support() const {
  for (const auto& [l, c] : coeffs)
    if (c != cd(0.0) && l % 2 != 0) return false;
  return true;
}

Eigen::VectorXcd ReferenceState::vector(const Window& w) const {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(w.dim());
  for (const auto& [l, c] : coeffs) v(w.index(l)) = c;
  return v;
}

int64_t DensityState::support_radius() const {
  int64_t r = 0;
  for (const auto& [k, c] : entries) r = std::max({r, std::abs(k.first), std::abs(k.second)});
  return r;
}

Eigen::MatrixXcd DensityState::matrix(const Window& w) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(w.dim(), w.dim());
  for (const auto& [k, c] : entries) m(w.index(k.first), w.index(k.second)) = c;
  return m;
}

void DensityState::validate(double tol) const {
  const Window w(std::max<int64_t>(support_radius(), 1));
  const Eigen::MatrixXcd m = matrix(w);
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) throw DomainError("density matrix is not Hermitian");
  if (std::abs(m.trace() - cd(1.0)) > tol) throw DomainError("density matrix does not have unit trace");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.eigenvalues().minCoeff() < -tol) throw DomainError("density matrix is not positive semidefinite");
}

ReferenceState random_reference_state(Rng& rng, int64_t radius, bool even_only) {
  std::normal_distribution<double> nd;
  ReferenceState s;
  for (int64_t l = -radius; l <= radius; ++l) {
    if (even_only && l % 2 != 0) continue;
    s.coeffs[l] = cd(nd(rng), nd(rng));
  }
  return s.normalized();
}

State state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw std::invalid_argument("state: expected an object with an 'entries' array");
  }
  const auto& es = j["entries"];
  const bool density = !es.empty() && es[0].is_object() && es[0].contains("ellp");
  if (density) {
    DensityState d;
    for (size_t i = 0; i < es.size(); ++i) {
      if (!es[i].is_object()) throw std::invalid_argument("entries[" + std::to_string(i) + "]: expected an object");
      d.entries[{get_int(es[i], "ell", i), get_int(es[i], "ellp", i)}] +=
          cd(get_number(es[i], "re", i, true), get_number(es[i], "im", i, false));
    }
    return d;
  }
  ReferenceState s;
  for (size_t i = 0; i < es.size(); ++i) {
    if (!es[i].is_object()) throw std::invalid_argument("entries[" + std::to_string(i) + "]: expected an object");
    s.coeffs[get_int(es[i], "ell", i)] += cd(get_number(es[i], "re", i, true), get_number(es[i], "im", i, false));
  }
  return s;
}

State state_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  try {
    return state_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// functional

std::complex<double> omega(const State& s, const AlgebraElement& a, std::optional<Window> w) {
  const int64_t r = radius_of(s);
  const int64_t bw = a.bandwidth();
  if (w && w->l_max < r + bw) {
    throw SizingError("window l_max=" + std::to_string(w->l_max) + " too small for support " + std::to_string(r) +
                      " plus bandwidth " + std::to_string(bw));
  }
  const Window win = w ? *w : auto_window(r, bw);
  const TruncatedOperator op = represent(a, win);
  if (const ReferenceState* p = as_pure(s)) {
    if (std::abs(p->norm() - 1.0) > kNormTol) throw DomainError("reference state is not normalized");
    const Eigen::VectorXcd v = p->vector(win);
    return v.dot(op.matrix * v);
  }
  const DensityState& d = std::get<DensityState>(s);
  d.validate(kNormTol);
  return (d.matrix(win) * op.matrix).trace();
}

KernelResult kernel_basis(const State& s, double rank_tol) {
  const auto& g = generators();
  KernelResult out;
  const std::array<const AlgebraElement*, 4> b = {&g.identity, &g.a1, &g.a2, &g.a3};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.gram(i, j) = omega(s, adjoint(*b[static_cast<size_t>(i)]) * *b[static_cast<size_t>(j)]);
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(out.gram);
  for (int i = 0; i < 4; ++i)
    if (svd.singularValues()(i) > rank_tol) ++out.gram_rank;
  if (even_pure(s)) {
    out.kernel = {g.a_minus * g.a_plus, g.a_plus};
    out.complement = {g.a_plus * g.a_minus, g.a_minus};
    return out;
  }
  // numeric kernel among the matrix units
  const Block2& e = matrix_units();
  const std::array<const AlgebraElement*, 4> u = {&e[0][0], &e[0][1], &e[1][0], &e[1][1]};
  Eigen::Matrix4cd gu;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gu(i, j) = omega(s, adjoint(*u[static_cast<size_t>(i)]) * *u[static_cast<size_t>(j)]);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(gu);
  for (int k = 0; k < 4; ++k) {
    AlgebraElement el;
    for (int i = 0; i < 4; ++i) {
      const cd c = es.eigenvectors()(i, k);
      if (std::abs(c) > 1e-14) el += Scalar(c) * *u[static_cast<size_t>(i)];
    }
    el.mark_float();
    (es.eigenvalues()(k) > rank_tol ? out.complement : out.kernel).push_back(el);
  }
  return out;
}

// ---------------------------------------------------------------------------
// representation

Eigen::MatrixXcd gns_matrix(const State& s, const GnsRep& rep, const AlgebraElement& a) {
  const Eigen::Index n = static_cast<Eigen::Index>(rep.basis.size());
  Eigen::MatrixXcd h(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = 0; l < n; ++l)
      h(k, l) = omega(s, adjoint(rep.basis[static_cast<size_t>(k)]) * a * rep.basis[static_cast<size_t>(l)]);
  return rep.frame.adjoint() * h * rep.frame;
}

GnsRep gns_rep(const State& s, double rank_tol) {
  const auto& g = generators();
  GnsRep rep;
  if (even_pure(s)) {
    rep.basis = {g.a_plus * g.a_minus, g.a_minus};
    rep.basis_labels = {"e0=[a+a-]", "e1=[a-]"};
    rep.frame = Eigen::MatrixXcd::Identity(2, 2);
  } else {
    const Block2& e = matrix_units();
    rep.basis = {e[0][0], e[0][1], e[1][0], e[1][1]};
    Eigen::Matrix4cd gu;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        gu(i, j) = omega(s, adjoint(rep.basis[static_cast<size_t>(i)]) * rep.basis[static_cast<size_t>(j)]);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(gu);
    std::vector<int> keep;
    for (int k = 3; k >= 0; --k)
      if (es.eigenvalues()(k) > rank_tol) keep.push_back(k);
    rep.frame = Eigen::MatrixXcd::Zero(4, static_cast<Eigen::Index>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c) {
      rep.frame.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]) / std::sqrt(es.eigenvalues()(keep[c]));
      rep.basis_labels.push_back("f" + std::to_string(c));
    }
  }
  rep.dim = static_cast<int>(rep.frame.cols());
  const std::vector<std::pair<std::string, const AlgebraElement*>> named = {
      {"1", &g.identity}, {"a1", &g.a1}, {"a2", &g.a2}, {"a3", &g.a3}, {"a+", &g.a_plus}, {"a-", &g.a_minus}};
  for (const auto& [name, a] : named) rep.matrices[name] = gns_matrix(s, rep, *a);
  rep.irreducible = rep.dim > 0 && commutant_dim({rep.matrices["a1"], rep.matrices["a2"], rep.matrices["a3"]}, 1e-10) == 1;
  return rep;
}

// ---------------------------------------------------------------------------
// trace

double qubit_membership_residual(const AlgebraElement& a, int64_t l_max) {
  const auto& g = generators();
  const int64_t bw = a.bandwidth();
  const Window w(std::max<int64_t>(l_max, bw + 4));
  const int64_t margin = std::max<int64_t>(bw, 1) + 1;
  const Eigen::Index lo = margin;
  const Eigen::Index n = w.dim() - 2 * margin;
  auto vec = [&](const AlgebraElement& x) {
    const Eigen::MatrixXcd m = represent(x, w).matrix.block(lo, lo, n, n);
    return Eigen::VectorXcd(Eigen::Map<const Eigen::VectorXcd>(m.data(), n * n));
  };
  Eigen::MatrixXcd basis(n * n, 4);
  basis.col(0) = vec(g.identity);
  basis.col(1) = vec(g.a1);
  basis.col(2) = vec(g.a2);
  basis.col(3) = vec(g.a3);
  const Eigen::VectorXcd y = vec(a);
  const Eigen::VectorXcd c = basis.colPivHouseholderQr().solve(y);
  return (basis * c - y).cwiseAbs().maxCoeff();
}

std::complex<double> qubit_trace(const State& s, const AlgebraElement& a, double membership_tol) {
  const double res = qubit_membership_residual(a);
  if (res > membership_tol) {
    std::ostringstream os;
    os << "qubit_trace: element is not in the qubit subalgebra (projection residual " << res << ")";
    throw DomainError(os.str());
  }
  const GnsRep rep = gns_rep(s);
  return gns_matrix(s, rep, a).trace();
}

std::complex<double> qubit_trace_two_term(const ReferenceState& psi, const AlgebraElement& a) {
  if (!psi.even_support()) throw DomainError("two-term trace formula needs an even-support state");
  if (std::abs(psi.norm() - 1.0) > kNormTol) throw DomainError("reference state is not normalized");
  const Window w = auto_window(psi.support_radius() + 1, a.bandwidth());
  const Eigen::VectorXcd v = psi.vector(w);
  const Eigen::VectorXcd vp = represent(generators().a_minus, w).matrix * v;
  const Eigen::MatrixXcd m = represent(a, w).matrix;
  return v.dot(m * v) + vp.dot(m * vp);
}

// ---------------------------------------------------------------------------
// report

Report verify_gns(const State& s, double tol) {
  const auto& g = generators();
  Report rep("gns");
  rep.add_float("omega(1)=1", std::abs(omega(s, g.identity) - cd(1.0)), tol);
  const KernelResult k = kernel_basis(s);
  rep.add({"kernel.gram_rank", std::to_string(k.gram_rank), "2", k.gram_rank == 2 ? Status::kPass : Status::kFail,
           Mode::kFloat, static_cast<double>(std::abs(k.gram_rank - 2)),
           k.gram_rank > 2 ? "qubit-restricted functional is mixed" : ""});
  for (size_t i = 0; i < k.kernel.size(); ++i) {
    rep.add_float("kernel.null[" + std::to_string(i) + "]", std::abs(omega(s, adjoint(k.kernel[i]) * k.kernel[i])), tol);
  }
  for (size_t i = 0; i < k.complement.size(); ++i) {
    const double v = omega(s, adjoint(k.complement[i]) * k.complement[i]).real();
    rep.add_float("kernel.complement_positive[" + std::to_string(i) + "]", v > tol ? 0.0 : 1.0, 0.5);
  }

  const GnsRep r = gns_rep(s);
  rep.add_exact("rep.irreducible", r.irreducible && r.dim == 2, "dim " + std::to_string(r.dim), "2");
  if (r.dim != 2) return rep;
  const cd i(0.0, 1.0);
  Eigen::Matrix2cd sx, sy, sz;
  sx << 0, 1, 1, 0;
  sy << 0, -i, i, 0;
  sz << 1, 0, 0, -1;
  if (even_pure(s)) {
    rep.add_float("rep(a1)=sigma_x", (r.matrices.at("a1") - sx).cwiseAbs().maxCoeff(), tol);
    rep.add_float("rep(a2)=sigma_y", (r.matrices.at("a2") - sy).cwiseAbs().maxCoeff(), tol);
    rep.add_float("rep(a3)=sigma_z", (r.matrices.at("a3") - sz).cwiseAbs().maxCoeff(), tol);
  }
  rep.add_float("rep(1)=1", (r.matrices.at("1") - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(), tol);

  const std::vector<std::pair<std::string, const AlgebraElement*>> gens = {
      {"1", &g.identity}, {"a1", &g.a1}, {"a2", &g.a2}, {"a3", &g.a3}};
  double hom = 0.0, star = 0.0;
  for (const auto& [na, a] : gens) {
    star = std::max(star, (gns_matrix(s, r, adjoint(*a)) - r.matrices.at(na).adjoint()).cwiseAbs().maxCoeff());
    for (const auto& [nb, b] : gens) {
      const Eigen::MatrixXcd lhs = gns_matrix(s, r, *a * *b);
      hom = std::max(hom, (lhs - r.matrices.at(na) * r.matrices.at(nb)).cwiseAbs().maxCoeff());
    }
  }
  rep.add_float("rep.homomorphism(16 pairs)", hom, tol);
  rep.add_float("rep.star", star, tol);

  rep.add_float("trace(1)=2", std::abs(qubit_trace(s, g.identity) - cd(2.0)), tol);
  for (const auto& [na, a] : gens) {
    if (na == "1") continue;
    rep.add_float("trace(" + na + ")=0", std::abs(qubit_trace(s, *a)), tol);
  }
  rep.add_float("trace.cyclic(a1a2,a2a1)", std::abs(qubit_trace(s, g.a1 * g.a2) - qubit_trace(s, g.a2 * g.a1)), tol);
  if (even_pure(s)) {
    const ReferenceState& psi = std::get<ReferenceState>(s);
    double two = 0.0;
    for (const auto& [na, a] : gens) two = std::max(two, std::abs(qubit_trace_two_term(psi, *a) - qubit_trace(s, *a)));
    rep.add_float("trace.two_term_formula", two, tol);
  }
  return rep;
}

}  // namespace weylqubit
