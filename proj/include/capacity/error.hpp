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

#ifndef CAPACITY_ERROR_HPP
#define CAPACITY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace capacity {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public error {
 public:
  using error::error;
};

/// A generated object would exceed a configured size guard.
class guard_exceeded : public error {
 public:
  using error::error;
};

class dimension_mismatch : public error {
 public:
  using error::error;
};

/// Caller violated an operation's documented precondition.
class precondition_error : public error {
 public:
  using error::error;
};

/// A certificate failed verification where a valid one was required.
class invalid_certificate : public error {
 public:
  using error::error;
};

/// Outcome of a verification predicate. Converts to bool; on failure
/// `reason` names the first violated item.
struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return ok; }
};

}  // namespace capacity

#endif  // CAPACITY_ERROR_HPP
