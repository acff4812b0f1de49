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

#include "weylqubit/serialize.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

namespace weylqubit {
namespace {

Rational rational_field(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  throw std::invalid_argument(where + ": expected \"p/q\" string or integer");
}

Scalar component_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("mag") || !j.contains("phase")) {
    throw std::invalid_argument(where + ": expected object with 'mag' and 'phase'");
  }
  const auto& mag = j.at("mag");
  const auto& phase = j.at("phase");
  if (mag.is_number_float() || phase.is_number_float()) {
    if (!mag.is_number() && !mag.is_string()) throw std::invalid_argument(where + ".mag: expected number");
    const double m = mag.is_string() ? rational_field(mag, where + ".mag").to_double() : mag.get<double>();
    const double p = phase.is_string() ? rational_field(phase, where + ".phase").to_double() : phase.get<double>();
    return Scalar(std::polar(m, p * std::numbers::pi));
  }
  return Scalar(Cyclotomic(rational_field(mag, where + ".mag")) *
                Cyclotomic::phase(rational_field(phase, where + ".phase")));
}

}  // namespace

nlohmann::json scalar_to_json(const Scalar& s) {
  if (!s.is_exact()) {
    const auto z = s.to_complex();
    return {{"mag", std::abs(z)}, {"phase", std::arg(z) / std::numbers::pi}};
  }
  const auto parts = s.exact().components();
  if (parts.empty()) return {{"mag", "0"}, {"phase", "0"}};
  if (parts.size() == 1) return {{"mag", parts[0].magnitude.str()}, {"phase", parts[0].phase.str()}};
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : parts) arr.push_back({{"mag", p.magnitude.str()}, {"phase", p.phase.str()}});
  return arr;
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    Scalar acc;
    for (size_t i = 0; i < j.size(); ++i) acc += component_from_json(j[i], "coeff[" + std::to_string(i) + "]");
    return acc;
  }
  return component_from_json(j, "coeff");
}

nlohmann::json element_to_json(const AlgebraElement& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, c] : a.terms()) {
    out.push_back({{"theta", key.theta.str()}, {"ell", key.ell}, {"coeff", scalar_to_json(c)}});
  }
  return out;
}

AlgebraElement element_from_json(const nlohmann::json& j) {
  const nlohmann::json* list = &j;
  if (j.is_object()) {
    if (!j.contains("terms")) throw std::invalid_argument("element: object form needs a 'terms' array");
    list = &j.at("terms");
  }
  if (!list->is_array()) throw std::invalid_argument("element: expected an array of terms");
  AlgebraElement result;
  for (size_t i = 0; i < list->size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    const auto& t = (*list)[i];
    if (!t.is_object()) throw std::invalid_argument(where + ": expected object");
    for (const char* field : {"theta", "ell", "coeff"}) {
      if (!t.contains(field)) throw std::invalid_argument(where + ": missing '" + field + "'");
    }
    if (!t.at("ell").is_number_integer()) throw std::invalid_argument(where + ".ell: expected integer");
    const Rational theta = rational_field(t.at("theta"), where + ".theta");
    Scalar coeff;
    try {
      coeff = scalar_from_json(t.at("coeff"));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + "." + e.what());
    }
    result += AlgebraElement::word_raw(theta, t.at("ell").get<int64_t>(), coeff);
  }
  return result;
}

AlgebraElement element_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open element file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  try {
    return element_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace weylqubit
