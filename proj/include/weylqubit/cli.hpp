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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace weylqubit {

enum class OutputFormat { kText, kJson };

struct RunConfig {
  std::string command;      ///< verify-pauli, verify-commutant, ..., optics
  std::string subcommand;   ///< optics: verify | simulate
  int64_t l_max = 32;
  bool l_max_explicit = false;
  std::optional<int64_t> margin;
  double tolerance = 1e-12;
  OutputFormat format = OutputFormat::kText;
  std::string output_path;  ///< empty: stdout
  int n = 1;
  std::string element_path;
  std::string state_path;
  int64_t d = 2;
  std::string gate;
  double phi = 0.0;
  std::string circuit_path;
  std::string input_path;
  int samples = -1;  ///< -1: suite default
  uint64_t seed = 1;
  bool strict_mirrors = false;
};

/// Environment variable consulted for the default l_max.
inline constexpr const char* kLMaxEnv = "WEYLQUBIT_L_MAX";

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// Parses argv into a config; on --help or a parse error writes to out/err and
/// returns the exit code instead.
struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitPass;
};
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs one command; exit 0 iff every report entry passes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace weylqubit
