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

#ifndef CAPACITY_BUDGET_HPP
#define CAPACITY_BUDGET_HPP

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

namespace capacity {

/// Wall-clock budget shared by the exhaustive searches. A default-constructed
/// budget never expires.
class Budget {
 public:
  using clock = std::chrono::steady_clock;

  Budget() = default;

  static Budget milliseconds(std::int64_t ms) {
    Budget b;
    b.deadline_ = clock::now() + std::chrono::milliseconds(ms);
    return b;
  }

  /// Reads CAPACITY_BUDGET_MS; unset or unparsable means unlimited.
  static Budget from_env() {
    const char* raw = std::getenv("CAPACITY_BUDGET_MS");
    if (raw == nullptr) return {};
    try {
      std::int64_t ms = std::stoll(raw);
      if (ms <= 0) return {};
      return milliseconds(ms);
    } catch (...) {
      return {};
    }
  }

  bool limited() const { return deadline_.has_value(); }

  // Polling the clock on every node is measurable, so only every 1024th call
  // actually looks at it.
  bool expired() const {
    if (!deadline_) return false;
    if (expired_) return true;
    if ((++polls_ & 1023u) != 0) return false;
    expired_ = clock::now() >= *deadline_;
    return expired_;
  }

  bool expired_now() const {
    if (!deadline_) return false;
    expired_ = expired_ || clock::now() >= *deadline_;
    return expired_;
  }

 private:
  std::optional<clock::time_point> deadline_;
  mutable std::uint32_t polls_ = 0;
  mutable bool expired_ = false;
};

}  // namespace capacity

#endif  // CAPACITY_BUDGET_HPP
