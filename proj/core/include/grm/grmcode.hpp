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
#include <string>
#include <string_view>

#include "grm/mpoly.hpp"

namespace grm {

// Parameters of RM_q(d, n) with d = a(q-1) + b, 0 <= b < q-1.
struct GrmParams {
  int q = 0;
  int n = 0;
  int d = 0;
  int a = 0;
  int b = 0;
  std::int64_t m = 0;   // length q^n
  std::int64_t k = 0;   // dimension
  std::int64_t w1 = 0;  // minimum distance (q-b) q^{n-a-1}
};

// Requires a supported q, n >= 1 and 1 <= d < n(q-1). The dimension comes
// from the alternating binomial sum with C(x, y) = 0 unless 0 <= y <= x.
GrmParams grm_params(int q, int n, int d);

// #{e in [0, q-1]^n : sum e <= d}, by enumeration.
std::int64_t dimension_oracle(int q, int n, int d);

// C(x, y), zero whenever x < 0, y < 0 or y > x.
std::int64_t binomial(std::int64_t x, std::int64_t y);

enum class W2Regime {
  kDegreeOne,       // d = 1
  kBinary,          // q = 2
  kSmallDegree,     // d < q
  kBZero,           // b = 0
  kBOneInterval,    // b = 1
  kBGeneral,        // 2 <= b < q-1
};

std::string_view regime_tag(W2Regime regime);

struct SecondWeightResult {
  W2Regime regime;
  bool exact = true;
  std::int64_t lo = 0;  // the value when exact
  std::int64_t hi = 0;

  std::int64_t value() const { return lo; }
};

// Second weight by regime:
//   d = 1:            q^n
//   q = 2, 2<=d<=n-2: 3 * 2^{n-d-1}
//   2 <= d < q, n>=2: q^n - d q^{n-1} + (d-1) q^{n-2}
//   q >= 3, n >= 3, q <= d <= (n-1)(q-1):
//     b = 0           2 q^{n-a-1} (q-1)
//     b = 1, a < n-2  [q^{n-a} - q^{n-a-1} + q^{n-a-2} - q^{n-a-3}, q^{n-a}]
//     b = 1, a = n-2  [q^2 - 2, q^2]
//     2 <= b < q-1    q^{n-a-2} (q-1) (q-b+1)
// Anything else throws kRegimeNotCovered.
SecondWeightResult second_weight(int q, int n, int d);

// prod_{i<=a} prod_{j<q-1} (X_i - c_j) * prod_{j<b} (X_{a+1} - c_j), where c_j
// is the field element with index j. Its weight is w1.
MultiPoly maximal_config_poly(int q, int n, int d);

}  // namespace grm
