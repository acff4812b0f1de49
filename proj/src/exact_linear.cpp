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

#include "weylqubit/exact_linear.hpp"

#include <map>
#include <utility>

namespace weylqubit {

ExactMatrix coefficient_matrix(const std::vector<std::vector<AlgebraElement>>& columns) {
  if (columns.empty()) return {};
  const size_t blocks = columns.front().size();
  std::map<std::pair<size_t, WeylKey>, size_t> row_of;
  for (const auto& col : columns) {
    if (col.size() != blocks) throw UsageError("coefficient_matrix: ragged block columns");
    for (size_t b = 0; b < blocks; ++b) {
      if (col[b].float_mode()) throw UsageError("coefficient_matrix: float-mode element in exact solve");
      for (const auto& [key, c] : col[b].terms()) row_of.emplace(std::make_pair(b, key), 0);
    }
  }
  size_t next = 0;
  for (auto& [k, idx] : row_of) idx = next++;
  ExactMatrix m(row_of.size(), std::vector<Cyclotomic>(columns.size()));
  for (size_t c = 0; c < columns.size(); ++c) {
    for (size_t b = 0; b < blocks; ++b) {
      for (const auto& [key, v] : columns[c][b].terms()) m[row_of.at({b, key})][c] = v.exact();
    }
  }
  return m;
}

size_t exact_rank(ExactMatrix m) {
  if (m.empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m.front().size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const Cyclotomic p = m[rank][c];
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      const Cyclotomic f = m[r][c];
      for (size_t k = c; k < cols; ++k) m[r][k] = p * m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

size_t exact_rank(const std::vector<AlgebraElement>& columns) {
  std::vector<std::vector<AlgebraElement>> cols;
  cols.reserve(columns.size());
  for (const auto& c : columns) cols.push_back({c});
  return exact_rank(coefficient_matrix(cols));
}

bool in_exact_span(const AlgebraElement& target, const std::vector<AlgebraElement>& basis) {
  std::vector<AlgebraElement> extended = basis;
  extended.push_back(target);
  return exact_rank(extended) == exact_rank(basis);
}

}  // namespace weylqubit
