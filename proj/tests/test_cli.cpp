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

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "weylqubit/cli.hpp"
#include "weylqubit/serialize.hpp"

namespace weylqubit {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "weylqubit_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const ParseResult p = parse_args(static_cast<int>(argv.size()), argv.data(), out, err);
  if (!p.config) return {p.exit_code, out.str(), err.str()};
  const int code = run(*p.config, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = WEYLQUBIT_TEST_DATA;

TEST(CliTest, VerifyPauliPasses) {
  const Outcome o = invoke({"verify-pauli"});
  EXPECT_EQ(o.code, kExitPass) << o.err;
  EXPECT_NE(o.out.find("passed"), std::string::npos);
}

TEST(CliTest, JsonSchema) {
  const Outcome o = invoke({"qudit", "--d", "3", "--format", "json"});
  ASSERT_EQ(o.code, kExitPass) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  ASSERT_TRUE(j.contains("entries"));
  std::string prev;
  for (const auto& e : j["entries"]) {
    for (const char* k : {"name", "status", "mode", "residual"}) EXPECT_TRUE(e.contains(k)) << k;
    const std::string name = e["name"];
    EXPECT_LE(prev, name);
    prev = name;
  }
}

TEST(CliTest, ExtractEmitsTree) {
  const Outcome o = invoke({"extract", "--n", "2", "--element", kData + "/v.json", "--format", "json"});
  ASSERT_EQ(o.code, kExitPass) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["data"]["depth"], 2);
  EXPECT_EQ(j["data"]["blocks"].size(), 4u);
}

TEST(CliTest, GnsFromFile) {
  const Outcome o = invoke({"gns", "--state", kData + "/even_state.json"});
  EXPECT_EQ(o.code, kExitPass) << o.out << o.err;
}

TEST(CliTest, OpticsVerifyAndSimulate) {
  EXPECT_EQ(invoke({"optics", "verify", "--gate", "phase", "--phi", "1.5707963"}).code, kExitPass);
  const Outcome s = invoke({"optics", "simulate", "--circuit", kData + "/sorter.json", "--input", kData + "/photon.json",
                            "--format", "json"});
  ASSERT_EQ(s.code, kExitPass) << s.err;
  EXPECT_TRUE(nlohmann::json::parse(s.out)["data"].contains("norm_out"));
}

TEST(CliTest, MalformedInputIsDiagnosed) {
  const Outcome o = invoke({"extract", "--n", "1", "--element", kData + "/malformed.json"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("terms[0]"), std::string::npos) << o.err;
  EXPECT_EQ(invoke({"gns", "--state", kData + "/missing.json"}).code, kExitUsage);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify-pauli", "--l-max", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify-pauli", "--tolerance", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"qudit"}).code, kExitUsage);
}

TEST(CliTest, CapacityErrorSurfaced) {
  const Outcome o = invoke({"extract", "--n", "2", "--element", kData + "/huge.json"});
  EXPECT_EQ(o.code, kExitCapacity);
  EXPECT_NE(o.err.find("overflow"), std::string::npos) << o.err;
  EXPECT_EQ(invoke({"extract", "--n", "5", "--element", kData + "/v.json"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitPass);
}

TEST(CliTest, MarginControlsInterior) {
  EXPECT_EQ(invoke({"verify-pauli", "--margin", "4"}).code, kExitPass);
  // a zero margin exposes truncation artifacts at the window edge
  const Outcome edge = invoke({"verify-pauli", "--margin", "0"});
  EXPECT_EQ(edge.code, kExitFail) << edge.out;
  EXPECT_EQ(invoke({"verify-pauli", "--margin", "40"}).code, kExitUsage);
}

TEST(CliTest, EnvironmentDefaultAndFlagPrecedence) {
  setenv(kLMaxEnv, "4", 1);
  EXPECT_EQ(invoke({"verify-pauli"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify-pauli", "--l-max", "24"}).code, kExitPass);
  unsetenv(kLMaxEnv);
}

}  // namespace
}  // namespace weylqubit
