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


// Acceptance driver: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "weylqubit/gns.hpp"
#include "weylqubit/optics.hpp"
#include "weylqubit/oracle.hpp"
#include "weylqubit/qubit.hpp"
#include "weylqubit/qudit.hpp"
#include "weylqubit/sampling.hpp"

using namespace weylqubit;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string tally(const Report& r) {
  return std::to_string(r.entries().size() - r.failures()) + "/" + std::to_string(r.entries().size());
}

std::string first_failure(const Report& r) {
  for (const auto& e : r.entries())
    if (e.status == Status::kFail) return " first failure: " + e.name;
  return "";
}

Outcome from_report(const Report& r) { return {r.all_pass(), tally(r) + " checks" + first_failure(r)}; }

Outcome criterion1() {
  const Report r = verify_pauli(32, 1e-12);
  return {r.all_pass() && r.entries().size() >= 12, tally(r) + " identities (exact + oracle at l_max=32)" + first_failure(r)};
}

Outcome criterion2() { return from_report(verify_commutant(50, 1, 32, 1e-12)); }

Outcome criterion3() { return from_report(verify_reconstruction(20, 2)); }

Outcome criterion4() {
  FactorOptions opt;
  opt.l_max = 16;
  const Report r = factor_check(opt);
  const int64_t dim = joint_commutant_dimension(opt);
  return {r.all_pass() && dim == 1, tally(r) + " checks, joint commutant dimension " + std::to_string(dim) + first_failure(r)};
}

Outcome criterion5() { return from_report(verify_tensor(100, 3)); }

Outcome criterion6() { return from_report(verify_extraction(20, 4)); }

Outcome criterion7() {
  Rng rng(7);
  size_t pass = 0;
  std::string fail;
  for (int i = 0; i < 10; ++i) {
    const Report r = verify_gns(random_reference_state(rng, 8, true), 1e-12);
    if (r.all_pass()) {
      ++pass;
    } else if (fail.empty()) {
      fail = " state " + std::to_string(i) + first_failure(r);
    }
  }
  return {pass == 10, std::to_string(pass) + "/10 even-support states" + fail};
}

Outcome criterion8() {
  bool ok = true;
  std::string detail;
  for (int64_t d : {2, 3, 4}) {
    const Report r = verify_qudit(d, 32, 1e-12);
    ok = ok && r.all_pass();
    detail += "d=" + std::to_string(d) + ":" + tally(r) + first_failure(r) + " ";
  }
  return {ok, detail};
}

Outcome criterion9() { return from_report(optics_suite(32, false)); }

// Deliberately false identities must be rejected symbolically and by the oracle.
Outcome criterion10() {
  const auto& g = generators();
  const AlgebraElement v = AlgebraElement::word_raw(Rational(0), 1);
  const AlgebraElement u = AlgebraElement::word_raw(Rational(1, 2), 0);
  const std::vector<std::tuple<std::string, AlgebraElement, AlgebraElement>> claims = {
      {"[a3,V]=0", g.a3 * v, v * g.a3},
      {"V=V*", v, adjoint(v)},
      {"a1a2=a2a1", g.a1 * g.a2, g.a2 * g.a1},
      {"a+a-=1", g.a_plus * g.a_minus, g.identity},
      {"U(pi/2)V=VU(pi/2)", u * v, v * u},
  };
  const Window w(32);
  size_t rejected = 0;
  std::string leaked;
  for (const auto& [name, lhs, rhs] : claims) {
    const bool symbolic_fails = !equals(lhs, rhs);
    const int64_t margin = std::max(lhs.bandwidth(), rhs.bandwidth()) + 1;
    const bool oracle_fails = interior_residual(represent(lhs, w), represent(rhs, w), margin) > 1e-6;
    if (symbolic_fails && oracle_fails) {
      ++rejected;
    } else {
      leaked += " " + name;
    }
  }
  return {rejected == claims.size() && rejected >= 3,
          std::to_string(rejected) + "/" + std::to_string(claims.size()) + " false identities rejected by both paths" +
              (leaked.empty() ? "" : " accepted:" + leaked)};
}

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0 means no runtime limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {1, "Pauli suite", 1.0, criterion1},
      {2, "commutant suite", 5.0, criterion2},
      {3, "Weyl pair reconstruction", 0.0, criterion3},
      {4, "factor check", 0.0, criterion4},
      {5, "split/recombine round trip", 0.0, criterion5},
      {6, "iterated extraction", 30.0, criterion6},
      {7, "GNS suite", 0.0, criterion7},
      {8, "qudit suite", 0.0, criterion8},
      {9, "optics suite", 60.0, criterion9},
      {10, "negative controls", 0.0, criterion10},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok;
    std::string timing = std::to_string(secs).substr(0, 5) + " s";
    if (c.budget_s > 0) {
      timing += " of " + std::to_string(static_cast<int>(c.budget_s)) + " s";
      if (secs >= c.budget_s) {
        ok = false;
        timing += " OVER BUDGET";
      }
    }
    std::printf("[%s] criterion %d: %s | %s | %s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(),
                timing.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
