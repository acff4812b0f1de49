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

#include <cmath>
#include <numbers>

#include "weylqubit/errors.hpp"
#include "weylqubit/optics.hpp"

namespace weylqubit {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(OpticsTest, BeamSplitterConvention) {
  const ModeSpace s{2, false, Window(4)};
  const TruncatedOperator u = component_unitary(Component::beam_splitter(0, 1), s);
  const double r = std::sqrt(0.5);
  const auto i0 = s.index(0, 0, 1), i1 = s.index(1, 0, 1);
  EXPECT_NEAR(std::abs(u.matrix(i0, i0) - std::complex<double>(r, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u.matrix(i1, i0) - std::complex<double>(0, r)), 0.0, 1e-15);
}

TEST(OpticsTest, HologramShiftsAndDovePrismPhases) {
  const ModeSpace s{1, false, Window(8)};
  const TruncatedOperator hg = component_unitary(Component::hologram(0, 2), s);
  EXPECT_NEAR(std::abs(hg.matrix(s.index(0, 0, 3), s.index(0, 0, 1)) - 1.0), 0.0, 1e-15);
  const TruncatedOperator dp = component_unitary(Component::dove_prism(0, 0.3), s);
  EXPECT_NEAR(std::abs(dp.matrix(s.index(0, 0, 2), s.index(0, 0, 2)) - std::polar(1.0, 0.6)), 0.0, 1e-15);
}

TEST(OpticsTest, ParitySorterRoutes) {
  const Report r = verify_dp_sorter(32, 24);
  EXPECT_TRUE(r.all_pass()) << r.to_text();
}

TEST(OpticsTest, InverseUndoesCircuit) {
  OpticalCircuit c;
  c.space = ModeSpace{2, true, Window(12)};
  for (const auto& st : {Component::beam_splitter(0, 1, 0.6), Component::qwp(0, 0.3), Component::qplate(1, 1),
                         Component::dove_prism(1, 0.4), Component::hologram(0, -1), Component::pbs(0, 1)}) {
    c.add(st);
  }
  const TruncatedOperator f = circuit_unitary(c), b = circuit_unitary(inverse(c));
  EXPECT_LT(interior_residual(b * f, identity_operator(f.window), 4), 1e-12);
}

class GateTest : public ::testing::TestWithParam<std::string> {};

TEST_P(GateTest, FidelityAndLeakage) {
  GateOptions opt;
  opt.phi = 0.7;
  const GateReport g = verify_gate(GetParam(), opt);
  EXPECT_GE(g.fidelity, 1.0 - 1e-10) << GetParam();
  EXPECT_LE(g.leakage, 1e-10) << GetParam();
  opt.strict_mirrors = true;
  EXPECT_GE(verify_gate(GetParam(), opt).fidelity, 1.0 - 1e-10) << GetParam() << " strict";
}

INSTANTIATE_TEST_SUITE_P(AllGates, GateTest,
                         ::testing::Values("phase", "not", "hadamard", "controlled_z", "pol_to_oam"));

TEST(OpticsTest, PhaseGateSweep) {
  for (int k = 0; k < 8; ++k) {
    GateOptions opt;
    opt.phi = k * kPi / 4;
    EXPECT_GE(verify_gate("phase", opt).fidelity, 1.0 - 1e-10) << opt.phi;
  }
}

TEST(OpticsTest, OpticalWeylRelation) {
  EXPECT_LT(optical_weyl_residual(32, 0.9, 2), 1e-12);
  EXPECT_LT(optical_weyl_residual(32, kPi / 3, -1), 1e-12);
}

TEST(OpticsTest, UnknownGateAndSizing) {
  EXPECT_ANY_THROW(verify_gate("toffoli"));
  GateOptions tiny;
  tiny.l_max = 6;
  EXPECT_THROW(verify_gate("controlled_z", tiny), SizingError);
}

TEST(OpticsTest, Validation) {
  const ModeSpace s{2, false, Window(4)};
  EXPECT_THROW(validate(Component::phase_shifter(3, 0.1), s), ConfigurationError);
  EXPECT_THROW(validate(Component::beam_splitter(0, 0), s), ConfigurationError);
  EXPECT_THROW(validate(Component::hwp(0, 0.1), s), ConfigurationError);
}

TEST(OpticsTest, CircuitJsonRoundTripAndSimulate) {
  const OpticalCircuit c = gate_circuit("not");
  const OpticalCircuit back = circuit_from_json(circuit_to_json(c));
  EXPECT_EQ(back.stages.size(), c.stages.size());
  EXPECT_LT((circuit_unitary(back).matrix - circuit_unitary(c).matrix).cwiseAbs().maxCoeff(), 1e-15);

  const auto circ = nlohmann::json::parse(R"({"space": {"paths": 2, "l_max": 16}, "stages": [
      {"kind": "beam_splitter", "paths": [0, 1]}, {"kind": "dove_prism", "path": 0, "alpha": 3.141592653589793},
      {"kind": "beam_splitter", "paths": [0, 1]}]})");
  const auto in = nlohmann::json::parse(R"({"entries": [{"path": 0, "ell": 3, "re": 1.0}]})");
  const nlohmann::json out = simulate(circuit_from_json(circ), in);
  EXPECT_NEAR(out["norm_out"].get<double>(), 1.0, 1e-12);
  EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"space": {"paths": 1}, "stages": [{"kind": "laser"}]})")),
               std::invalid_argument);
}

}  // namespace
}  // namespace weylqubit
