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

#include "json.hpp"
#include "weylqubit/algebra.hpp"

namespace weylqubit {

/// Scalar as {mag, phase} (phase in units of pi) or, for exact values with
/// several phase components, an array of such objects. Exact parts are "p/q"
/// strings, float parts are numbers.
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

/// Element as a list of {theta: "p/q", ell, coeff}. Lossless for exact elements.
nlohmann::json element_to_json(const AlgebraElement& a);
/// Accepts the list form or {"terms": [...]}. Throws std::invalid_argument
/// with the offending location on malformed input.
AlgebraElement element_from_json(const nlohmann::json& j);

AlgebraElement element_from_file(const std::string& path);

}  // namespace weylqubit
