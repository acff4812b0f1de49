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
#include <stdexcept>
#include <string>

namespace weylqubit {

/// Exact arithmetic ran out of room (int64 overflow, cyclotomic level cap,
/// term-count cap). Never recovered from by switching to floating point.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncation window is too small for the element or state being used.
class SizingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller misuse, e.g. exact comparison of float-mode elements.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Optical component or circuit references features the space lacks.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace checked {

/// gcd of non-negative 128-bit values (std::gcd rejects __int128 in strict mode).
inline __int128 gcd128(__int128 a, __int128 b) {
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int64_t add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("int64 overflow in exact addition");
  return r;
}

inline int64_t sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw CapacityError("int64 overflow in exact subtraction");
  return r;
}

inline int64_t mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("int64 overflow in exact multiplication");
  return r;
}

inline int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw CapacityError("int64 overflow in exact arithmetic");
  return static_cast<int64_t>(v);
}

}  // namespace checked
}  // namespace weylqubit
