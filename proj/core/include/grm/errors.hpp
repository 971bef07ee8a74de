// Copyright 2026 The grm Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grm {

enum class ErrorCode {
  kUnsupportedCardinality,
  kDivisionByZero,
  kSyntaxError,
  kVariableOutOfRange,
  kCoefficientOutOfRange,
  kBudgetExceeded,
  kZeroPolynomial,
  kLengthMismatch,
  kIterationCapExceeded,
  kInvalidExponent,
  kDegreeOutOfRange,
  kRegimeNotCovered,
  kInvalidType,
  kExchangeNotApplicable,
  kNotInV,
  kParameterOutOfRange,
  kStructureMismatch,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Grids larger than this are refused by the enumeration routines unless the
// caller passes a larger cap.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// q^n, throwing kBudgetExceeded once the value passes `cap`.
std::uint64_t checked_grid_size(int q, int n, std::uint64_t cap);

// Exact integer power; callers stay far below overflow for supported sizes.
std::int64_t ipow(std::int64_t base, int exp);

}  // namespace grm
