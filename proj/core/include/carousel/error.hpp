// Copyright 2026 The Authors.
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

#ifndef CAROUSEL_ERROR_HPP_
#define CAROUSEL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace carousel {

enum class ErrorCode {
  kDegenerateRatio,
  kEmptyInput,
  kEmptyIntersection,
  kNotSeparable,
  kNotExternal,
  kDegenerateNucleus,
  kBadRadius,
  kPreconditionViolated,
  kEdgeFreeRequired,
  kNoInitialWitness,
  kSizeLimit,
  kGenerationFailed,
  kLemmaViolation,
  kParseError,
};

std::string_view ToString(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ToString(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateRatio: return "DegenerateRatio";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kEmptyIntersection: return "EmptyIntersection";
    case ErrorCode::kNotSeparable: return "NotSeparable";
    case ErrorCode::kNotExternal: return "NotExternal";
    case ErrorCode::kDegenerateNucleus: return "DegenerateNucleus";
    case ErrorCode::kBadRadius: return "BadRadius";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kEdgeFreeRequired: return "EdgeFreeRequired";
    case ErrorCode::kNoInitialWitness: return "NoInitialWitness";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kLemmaViolation: return "LemmaViolation";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace carousel

#endif  // CAROUSEL_ERROR_HPP_
