// Copyright (c) 2026, The semnet Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semnet {

enum class ErrorCode {
  kLimitExceeded,
  kScopeMismatch,
  kUnknownSet,
  kInvalidNetwork,
  kInvalidQuery,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLimitExceeded: return "LIMIT_EXCEEDED";
    case ErrorCode::kScopeMismatch: return "SCOPE_MISMATCH";
    case ErrorCode::kUnknownSet: return "UNKNOWN_SET";
    case ErrorCode::kInvalidNetwork: return "INVALID_NETWORK";
    case ErrorCode::kInvalidQuery: return "INVALID_QUERY";
  }
  return "UNKNOWN";
}

/// Raised by the engine and the checkers. Parsing and validation never throw;
/// they report findings as values instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semnet
