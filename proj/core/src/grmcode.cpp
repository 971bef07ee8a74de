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

#include "grm/grmcode.hpp"

#include <algorithm>
#include <string>

namespace grm {

namespace {

void check_params(int q, int n, int d) {
  make_field(q);
  if (n < 1) throw Error(ErrorCode::kDegreeOutOfRange, "n must be at least 1");
  if (d < 1 || d >= n * (q - 1)) {
    throw Error(ErrorCode::kDegreeOutOfRange,
                "d = " + std::to_string(d) + " outside 1 <= d < n(q-1) = " +
                    std::to_string(n * (q - 1)));
  }
}

}  // namespace

std::int64_t binomial(std::int64_t x, std::int64_t y) {
  if (x < 0 || y < 0 || y > x) return 0;
  y = std::min(y, x - y);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= y; ++i) r = r * (x - y + i) / i;
  return r;
}

GrmParams grm_params(int q, int n, int d) {
  check_params(q, n, d);
  GrmParams p;
  p.q = q;
  p.n = n;
  p.d = d;
  p.a = d / (q - 1);
  p.b = d % (q - 1);
  p.m = ipow(q, n);
  for (int t = 0; t <= d; ++t) {
    for (int j = 0; j <= n; ++j) {
      const std::int64_t s = t - static_cast<std::int64_t>(j) * q;
      const std::int64_t term = binomial(n, j) * binomial(s + n - 1, s);
      p.k += (j % 2 == 0) ? term : -term;
    }
  }
  p.w1 = static_cast<std::int64_t>(q - p.b) * ipow(q, n - p.a - 1);
  return p;
}

std::int64_t dimension_oracle(int q, int n, int d) {
  std::vector<int> e(n, 0);
  std::int64_t count = 0;
  while (true) {
    int sum = 0;
    for (int x : e) sum += x;
    if (sum <= d) ++count;
    int i = n - 1;
    while (i >= 0 && ++e[i] == q) e[i--] = 0;
    if (i < 0) break;
  }
  return count;
}

std::string_view regime_tag(W2Regime regime) {
  switch (regime) {
    case W2Regime::kDegreeOne: return "d=1";
    case W2Regime::kBinary: return "q=2";
    case W2Regime::kSmallDegree: return "d<q";
    case W2Regime::kBZero: return "b=0";
    case W2Regime::kBOneInterval: return "b=1-interval";
    case W2Regime::kBGeneral: return "2<=b<q-1";
  }
  return "?";
}

SecondWeightResult second_weight(int q, int n, int d) {
  check_params(q, n, d);
  auto exact = [](W2Regime r, std::int64_t v) { return SecondWeightResult{r, true, v, v}; };
  const std::int64_t qn = ipow(q, n);
  if (d == 1) return exact(W2Regime::kDegreeOne, qn);
  if (q == 2) {
    if (d <= n - 2) return exact(W2Regime::kBinary, 3 * ipow(2, n - d - 1));
    throw Error(ErrorCode::kRegimeNotCovered,
                "q = 2 needs d <= n-2 (d = " + std::to_string(d) + ")");
  }
  if (d < q) {
    if (n < 2) throw Error(ErrorCode::kRegimeNotCovered, "d < q needs n >= 2");
    return exact(W2Regime::kSmallDegree,
                 qn - d * ipow(q, n - 1) + (d - 1) * ipow(q, n - 2));
  }
  if (n < 3) {
    throw Error(ErrorCode::kRegimeNotCovered, "n = " + std::to_string(n) + " with d >= q");
  }
  if (d > (n - 1) * (q - 1)) {
    throw Error(ErrorCode::kRegimeNotCovered,
                "d > (n-1)(q-1) = " + std::to_string((n - 1) * (q - 1)));
  }
  const int a = d / (q - 1);
  const int b = d % (q - 1);
  if (b == 0) return exact(W2Regime::kBZero, 2 * ipow(q, n - a - 1) * (q - 1));
  if (b == 1) {
    SecondWeightResult r{W2Regime::kBOneInterval, false, 0, ipow(q, n - a)};
    if (a < n - 2) {
      r.lo = ipow(q, n - a) - ipow(q, n - a - 1) + ipow(q, n - a - 2) - ipow(q, n - a - 3);
    } else {
      r.lo = static_cast<std::int64_t>(q) * q - 2;
    }
    return r;
  }
  return exact(W2Regime::kBGeneral,
               ipow(q, n - a - 2) * (q - 1) * static_cast<std::int64_t>(q - b + 1));
}

MultiPoly maximal_config_poly(int q, int n, int d) {
  check_params(q, n, d);
  const FieldPtr field = make_field_ptr(q);
  const int a = d / (q - 1);
  const int b = d % (q - 1);
  auto block = [&](int var, int count) {
    MultiPoly f = MultiPoly::constant(field, n, field->one());
    const MultiPoly x = MultiPoly::variable(field, n, var);
    for (int j = 0; j < count; ++j) {
      const Element c{static_cast<std::uint32_t>(j)};
      f = f * (x - MultiPoly::constant(field, n, c));
    }
    return f;
  };
  MultiPoly f = MultiPoly::constant(field, n, field->one());
  for (int i = 0; i < a; ++i) f = f * block(i, q - 1);
  if (b > 0) f = f * block(a, b);
  return f;
}

}  // namespace grm
