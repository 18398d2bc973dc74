// Copyright 2026 The capacity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPACITY_REPORT_HPP
#define CAPACITY_REPORT_HPP

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "capacity/rational.hpp"

namespace capacity {

/// An exact rational, or a floating-point value valid up to a tolerance.
struct BoundValue {
  std::optional<Rational> exact;
  double approx = 0;

  static BoundValue rational(Rational q) {
    double x = to_double(q);
    return BoundValue{std::move(q), x};
  }
  static BoundValue real(double x) { return BoundValue{std::nullopt, x}; }

  bool is_exact() const { return exact.has_value(); }
};

inline bool operator<=(const BoundValue& a, const BoundValue& b) {
  if (a.is_exact() && b.is_exact()) return *a.exact <= *b.exact;
  return a.approx <= b.approx;
}

inline bool operator==(const BoundValue& a, const BoundValue& b) {
  if (a.is_exact() != b.is_exact()) return false;
  return a.is_exact() ? *a.exact == *b.exact : a.approx == b.approx;
}

inline std::string to_string(const BoundValue& v) {
  if (v.is_exact()) return to_string(*v.exact);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v.approx);
  return buf;
}

/// Interval [lower, upper] on a graph parameter, with references to the
/// certificates that justify each end.
struct BoundReport {
  std::string param;
  std::string graph;
  BoundValue lower;
  BoundValue upper;
  std::vector<std::string> witness_refs;
  std::optional<double> tol;          ///< set for floating-point values
  std::optional<double> runtime_ms;   ///< omitted from deterministic output
  bool derived_from_factors = false;  ///< value composed from factor values

  bool exact() const { return lower == upper; }
};

}  // namespace capacity

#endif  // CAPACITY_REPORT_HPP
