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


#include <gtest/gtest.h>

#include <complex>

#include "weylqubit/errors.hpp"
#include "weylqubit/gns.hpp"
#include "weylqubit/qubit.hpp"

namespace weylqubit {
namespace {

using cd = std::complex<double>;

ReferenceState even_state() {
  ReferenceState s;
  s.coeffs[0] = cd(0.8, 0.0);
  s.coeffs[2] = cd(0.0, 0.6);
  return s;
}

TEST(GnsTest, OmegaOnGenerators) {
  const auto& g = generators();
  const State s = even_state();
  EXPECT_NEAR(std::abs(omega(s, g.identity) - 1.0), 0.0, 1e-14);
  // even support: a3 acts as +1
  EXPECT_NEAR(std::abs(omega(s, g.a3) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(omega(s, g.a1)), 0.0, 1e-14);
}

TEST(GnsTest, EvenStateGivesPauliMatrices) {
  const Report r = verify_gns(even_state());
  EXPECT_TRUE(r.all_pass()) << r.to_text();
  const GnsRep rep = gns_rep(even_state());
  EXPECT_EQ(rep.dim, 2);
  EXPECT_TRUE(rep.irreducible);
  Eigen::Matrix2cd sz;
  sz << 1, 0, 0, -1;
  EXPECT_NEAR((rep.matrices.at("a3") - sz).cwiseAbs().maxCoeff(), 0.0, 1e-12);
}

TEST(GnsTest, KernelRankTwo) {
  const KernelResult k = kernel_basis(even_state());
  EXPECT_EQ(k.gram_rank, 2);
  EXPECT_EQ(k.kernel.size(), 2u);
}

TEST(GnsTest, RandomEvenStates) {
  Rng rng(41);
  for (int i = 0; i < 5; ++i) {
    const Report r = verify_gns(random_reference_state(rng, 6, true));
    EXPECT_TRUE(r.all_pass()) << r.to_text();
  }
}

TEST(GnsTest, QubitTrace) {
  const auto& g = generators();
  const State s = even_state();
  EXPECT_NEAR(std::abs(qubit_trace(s, g.identity) - 2.0), 0.0, 1e-12);
  for (const AlgebraElement* a : {&g.a1, &g.a2, &g.a3}) EXPECT_NEAR(std::abs(qubit_trace(s, *a)), 0.0, 1e-12);
  EXPECT_THROW(qubit_trace(s, AlgebraElement::word_raw(Rational(1, 3), 1)), DomainError);
}

TEST(GnsTest, MixedSupportFlagged) {
  ReferenceState s;
  s.coeffs[0] = cd(0.6, 0.0);
  s.coeffs[3] = cd(0.8, 0.0);
  const KernelResult k = kernel_basis(s);
  EXPECT_GT(k.gram_rank, 2);
  const Report r = verify_gns(s);
  const ReportEntry* e = r.find("kernel.gram_rank");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->status, Status::kFail);
  EXPECT_FALSE(e->note.empty());
}

TEST(GnsTest, Errors) {
  ReferenceState s;
  s.coeffs[0] = cd(2.0, 0.0);
  EXPECT_THROW(omega(State(s), generators().a1), DomainError);
  EXPECT_THROW(omega(State(even_state()), generators().a1, Window(2)), SizingError);
  EXPECT_THROW(state_from_json(nlohmann::json::parse(R"({"entries": [{"re": 1.0}]})")), std::invalid_argument);
  EXPECT_THROW(state_from_json(nlohmann::json::parse(R"([1, 2])")), std::invalid_argument);
}

TEST(GnsTest, DensityState) {
  DensityState d;
  d.entries[{0, 0}] = 0.5;
  d.entries[{2, 2}] = 0.5;
  const auto& g = generators();
  EXPECT_NEAR(std::abs(omega(State(d), g.a3) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(omega(State(d), g.identity) - 1.0), 0.0, 1e-14);
}

}  // namespace
}  // namespace weylqubit
