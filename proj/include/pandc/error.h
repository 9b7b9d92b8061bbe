// Copyright 2026 The pandc Authors.
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

#ifndef PANDC_ERROR_H_
#define PANDC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pandc {

// Every failure raised by the library carries one of these codes. The wire
// protocol and the CLI map them to stable strings / exit codes.
enum class ErrorCode {
  kParseError,
  kInvalidProfile,
  kDimensionMismatch,
  kInvalidConfig,
  kInvalidTransform,
  kOutOfTurn,
  kSumConstraintViolated,
  kUnknownOption,
  kNegativeBid,
  kNotSettled,
  kWrongPlayerCount,
  kNonUniqueEfficientOption,
  kEpsilonTooLarge,
  kEpsilonNonPositive,
  kGridBudgetExceeded,
  kOverflow,
  kInvalidArgument,
};

// Machine-readable snake_case name, e.g. "out_of_turn".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pandc

#endif  // PANDC_ERROR_H_
