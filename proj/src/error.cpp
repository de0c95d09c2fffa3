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

#include "normtrace/error.hpp"

namespace normtrace {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kLevelMismatch: return "LevelMismatch";
    case ErrorCode::kZeroArgument: return "ZeroArgument";
    case ErrorCode::kScaleExceeded: return "ScaleExceeded";
    case ErrorCode::kTrivialCharacter: return "TrivialCharacter";
    case ErrorCode::kRoundingTooLarge: return "RoundingTooLarge";
    case ErrorCode::kNonIntegerResult: return "NonIntegerResult";
    case ErrorCode::kDivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace normtrace
