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

#include "grm/errors.hpp"

namespace grm {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedCardinality: return "UnsupportedCardinality";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kVariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::kCoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kIterationCapExceeded: return "IterationCapExceeded";
    case ErrorCode::kInvalidExponent: return "InvalidExponent";
    case ErrorCode::kDegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::kRegimeNotCovered: return "RegimeNotCovered";
    case ErrorCode::kInvalidType: return "InvalidType";
    case ErrorCode::kExchangeNotApplicable: return "ExchangeNotApplicable";
    case ErrorCode::kNotInV: return "NotInV";
    case ErrorCode::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::kStructureMismatch: return "StructureMismatch";
  }
  return "Unknown";
}

std::uint64_t checked_grid_size(int q, int n, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::uint64_t>(q);
    if (size > cap) {
      throw Error(ErrorCode::kBudgetExceeded,
                  std::to_string(q) + "^" + std::to_string(n) +
                      " exceeds the enumeration budget " + std::to_string(cap));
    }
  }
  return size;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace grm
