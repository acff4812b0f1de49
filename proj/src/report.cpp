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

#include "weylqubit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace weylqubit {

namespace {

std::vector<const ReportEntry*> sorted(const std::vector<ReportEntry>& es) {
  std::vector<const ReportEntry*> out;
  for (const auto& e : es) out.push_back(&e);
  std::stable_sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->name < b->name; });
  return out;
}

}  // namespace

void Report::add_exact(const std::string& name, bool ok, const std::string& lhs, const std::string& rhs) {
  add({name, lhs, rhs, ok ? Status::kPass : Status::kFail, Mode::kExact, ok ? 0.0 : 1.0, ""});
}

void Report::add_float(const std::string& name, double residual, double tol, const std::string& lhs,
                       const std::string& rhs) {
  // NaN fails
  const bool ok = residual <= tol;
  add({name, lhs, rhs, ok ? Status::kPass : Status::kFail, Mode::kFloat, residual, ""});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto e : other.entries_) {
    e.name = prefix + e.name;
    entries_.push_back(std::move(e));
  }
}

bool Report::all_pass() const { return failures() == 0; }

size_t Report::failures() const {
  return static_cast<size_t>(std::count_if(entries_.begin(), entries_.end(),
                                           [](const ReportEntry& e) { return !e.passed(); }));
}

const ReportEntry* Report::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["report"] = title_;
  j["status"] = all_pass() ? "pass" : "fail";
  nlohmann::json arr = nlohmann::json::array();
  for (const ReportEntry* e : sorted(entries_)) {
    nlohmann::json je = {{"name", e->name},
                         {"status", e->passed() ? "pass" : "fail"},
                         {"mode", e->mode == Mode::kExact ? "exact" : "float"},
                         {"residual", e->residual}};
    if (!e->lhs.empty()) je["lhs"] = e->lhs;
    if (!e->rhs.empty()) je["rhs"] = e->rhs;
    if (!e->note.empty()) je["note"] = e->note;
    arr.push_back(std::move(je));
  }
  j["entries"] = std::move(arr);
  if (!extra_.empty()) j["data"] = extra_;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title_.empty()) os << "== " << title_ << " ==\n";
  for (const ReportEntry* e : sorted(entries_)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", e->residual);
    os << (e->passed() ? "[pass] " : "[FAIL] ") << e->name << "  (" << (e->mode == Mode::kExact ? "exact" : "float")
       << ", residual " << buf << ")";
    if (!e->note.empty()) os << "  " << e->note;
    os << "\n";
  }
  os << entries_.size() - failures() << "/" << entries_.size() << " passed\n";
  return os.str();
}

}  // namespace weylqubit
