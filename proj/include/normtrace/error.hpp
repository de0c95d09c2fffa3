// Copyright 2026 The normtrace Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace normtrace {

enum class ErrorCode {
  kNotPrime,
  kInvalidArgument,
  kDivisionByZero,
  kLevelMismatch,
  kZeroArgument,
  kScaleExceeded,
  kTrivialCharacter,
  kRoundingTooLarge,
  kNonIntegerResult,
  kDivisibilityViolation,
  kEvenCharacteristic,
  kUnsupported,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above; callers
// that need to distinguish findings from bugs switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) Fail(code, what);
}

}  // namespace normtrace
