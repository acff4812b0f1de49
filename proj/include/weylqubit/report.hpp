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

#include <string>
#include <vector>

#include "json.hpp"

namespace weylqubit {

enum class Status { kPass, kFail };
enum class Mode { kExact, kFloat };

struct ReportEntry {
  std::string name;
  std::string lhs;
  std::string rhs;
  Status status = Status::kFail;
  Mode mode = Mode::kExact;
  double residual = 0.0;
  std::string note;

  bool passed() const { return status == Status::kPass; }
};

/// Ordered collection of identity checks. Output is sorted by name.
class Report {
 public:
  explicit Report(std::string title = "") : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<ReportEntry>& entries() const { return entries_; }
  /// Free-form payload attached to the JSON output (e.g. gate matrices).
  nlohmann::json& extra() { return extra_; }
  const nlohmann::json& extra() const { return extra_; }

  void add(ReportEntry e) { entries_.push_back(std::move(e)); }
  void add_exact(const std::string& name, bool ok, const std::string& lhs = "", const std::string& rhs = "");
  void add_float(const std::string& name, double residual, double tol, const std::string& lhs = "",
                 const std::string& rhs = "");
  /// Appends every entry of another report, prefixing names.
  void merge(const Report& other, const std::string& prefix = "");

  bool all_pass() const;
  size_t failures() const;
  const ReportEntry* find(const std::string& name) const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string title_;
  std::vector<ReportEntry> entries_;
  nlohmann::json extra_ = nlohmann::json::object();
};

}  // namespace weylqubit
