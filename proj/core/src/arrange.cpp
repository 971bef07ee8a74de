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

#include "grm/arrange.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace grm {

ArrangementType::ArrangementType(int q, int n, std::vector<int> block_sizes)
    : q_(q), n_(n), blocks_(std::move(block_sizes)) {
  std::sort(blocks_.begin(), blocks_.end(), std::greater<>());
  if (q < 2 || n < 1) throw Error(ErrorCode::kInvalidType, "needs q >= 2 and n >= 1");
  if (blocks_.empty() || block_count() > n) {
    throw Error(ErrorCode::kInvalidType, "block count must lie in [1, n]: " + to_string());
  }
  for (int s : blocks_) {
    if (s < 1 || s > q - 1) {
      throw Error(ErrorCode::kInvalidType, "block sizes must lie in [1, q-1]: " + to_string());
    }
  }
}

int ArrangementType::hyperplanes() const {
  int s = 0;
  for (int b : blocks_) s += b;
  return s;
}

std::string ArrangementType::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(blocks_[i]);
  }
  return out + ")";
}

std::string_view exchange_name(ExchangeKind kind) {
  switch (kind) {
    case ExchangeKind::kT1: return "T1";
    case ExchangeKind::kT2: return "T2";
    case ExchangeKind::kT3: return "T3";
    case ExchangeKind::kT4: return "T4";
  }
  return "?";
}

std::int64_t n_points_type(const ArrangementType& t) {
  const int q = t.q();
  std::int64_t missed = ipow(q, t.n() - t.block_count());
  for (int s : t.blocks()) missed *= q - s;
  return ipow(q, t.n()) - missed;
}

Arrangement realize(const ArrangementType& t) {
  Arrangement arr{t.q(), t.n(), {}};
  for (int i = 0; i < t.block_count(); ++i) {
    HyperplaneBlock block{i, {}};
    for (int j = 0; j < t.blocks()[i]; ++j)
      block.constants.push_back(Element{static_cast<std::uint32_t>(j)});
    arr.blocks.push_back(std::move(block));
  }
  return arr;
}

std::uint64_t n_points_grid(const Arrangement& arr, std::uint64_t budget) {
  const int q = arr.q;
  const int n = arr.n;
  const std::uint64_t size = checked_grid_size(q, n, budget);
  // hit[i][x]: coordinate arr.blocks[i].direction equal to x lies on a hyperplane
  std::vector<std::vector<char>> hit;
  for (const auto& block : arr.blocks) {
    if (block.direction < 0 || block.direction >= n) {
      throw Error(ErrorCode::kInvalidType, "direction outside 0..n-1");
    }
    std::vector<char> row(q, 0);
    for (Element c : block.constants) row.at(c.index) = 1;
    hit.push_back(std::move(row));
  }
  std::vector<int> x(n, 0);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    for (std::size_t i = 0; i < hit.size(); ++i) {
      if (hit[i][x[arr.blocks[i].direction]]) {
        ++count;
        break;
      }
    }
    for (int i = n - 1; i >= 0; --i) {
      if (++x[i] < q) break;
      x[i] = 0;
    }
  }
  return count;
}

MultiPoly arrangement_poly(const Arrangement& arr) {
  const FieldPtr field = make_field_ptr(arr.q);
  MultiPoly f = MultiPoly::constant(field, arr.n, field->one());
  for (const auto& block : arr.blocks) {
    const MultiPoly x = MultiPoly::variable(field, arr.n, block.direction);
    for (Element c : block.constants) f = f * (x - MultiPoly::constant(field, arr.n, c));
  }
  return f;
}

namespace {

void check_degree(int q, int n, int d) {
  if (q < 2 || n < 1 || d < 1 || d >= n * (q - 1)) {
    throw Error(ErrorCode::kDegreeOutOfRange,
                "(q, n, d) = (" + std::to_string(q) + ", " + std::to_string(n) + ", " +
                    std::to_string(d) + ") outside 1 <= d < n(q-1)");
  }
}

}  // namespace

ArrangementType maximal_type(int q, int n, int d) {
  check_degree(q, n, d);
  const int a = d / (q - 1);
  const int b = d % (q - 1);
  std::vector<int> blocks(a, q - 1);
  if (b > 0) blocks.push_back(b);
  return ArrangementType(q, n, std::move(blocks));
}

bool is_maximal_type(const ArrangementType& t, int d) {
  const int q = t.q();
  if (d < 1 || t.hyperplanes() != d) return false;
  const int a = d / (q - 1);
  const int b = d % (q - 1);
  std::vector<int> expected(a, q - 1);
  if (b > 0) expected.push_back(b);
  return std::equal(expected.begin(), expected.end(), t.blocks().begin(), t.blocks().end());
}

bool exchange_applicable(int q, int n, int d, ExchangeKind kind) {
  if (q < 3 || n < 1 || d < 1 || d >= n * (q - 1)) return false;
  const int a = d / (q - 1);
  const int b = d % (q - 1);
  switch (kind) {
    case ExchangeKind::kT1: return a >= 1 && a <= n - 1 && b < q - 2;
    case ExchangeKind::kT2: return a >= 1 && a < n - 1 && b >= 1;
    case ExchangeKind::kT3: return a >= 1 && a < n - 1 && b >= 2;
    case ExchangeKind::kT4: return a >= 1 && a < n - 1 && b == 1;
  }
  return false;
}

ExchangeResult apply_exchange(int q, int n, int d, ExchangeKind kind) {
  if (!exchange_applicable(q, n, d, kind)) {
    throw Error(ErrorCode::kExchangeNotApplicable,
                std::string(exchange_name(kind)) + " at (q, n, d) = (" + std::to_string(q) +
                    ", " + std::to_string(n) + ", " + std::to_string(d) + ")");
  }
  const int a = d / (q - 1);
  const int b = d % (q - 1);
  std::vector<int> blocks(a, q - 1);
  switch (kind) {
    case ExchangeKind::kT1:
      blocks[0] = q - 2;
      blocks.push_back(b + 1);
      break;
    case ExchangeKind::kT2:
      blocks[0] = q - 2;
      blocks.push_back(b);
      blocks.push_back(1);
      break;
    case ExchangeKind::kT3:
      blocks.push_back(b - 1);
      blocks.push_back(1);
      break;
    case ExchangeKind::kT4:
      break;
  }
  ArrangementType type(q, n, std::move(blocks));
  const std::int64_t n_pts = n_points_type(type);
  const std::int64_t n1 = n_points_type(maximal_type(q, n, d));
  return ExchangeResult{std::move(type), n_pts, n1 - n_pts};
}

ExchangeClosedForm exchange_closed_form(int q, int n, int d, ExchangeKind kind) {
  if (!exchange_applicable(q, n, d, kind)) {
    throw Error(ErrorCode::kExchangeNotApplicable, std::string(exchange_name(kind)));
  }
  const int a = d / (q - 1);
  const int b = d % (q - 1);
  const std::int64_t qn = ipow(q, n);
  switch (kind) {
    case ExchangeKind::kT1:
      return {qn - 2 * ipow(q, n - a - 1) * (q - b - 1), ipow(q, n - a - 1) * (q - b - 2)};
    case ExchangeKind::kT2:
      return {qn - 2 * ipow(q, n - a - 2) * (q - 1) * (q - b),
              ipow(q, n - a - 2) * (q - b) * (q - 2)};
    case ExchangeKind::kT3:
      return {qn - ipow(q, n - a - 2) * (q - 1) * (q - b + 1), ipow(q, n - a - 2) * (b - 1)};
    case ExchangeKind::kT4:
      return {qn - ipow(q, n - a), ipow(q, n - a - 1)};
  }
  return {0, 0};
}

std::vector<ExchangeComparison> exchange_comparisons(int q, int n, int d) {
  std::vector<ExchangeComparison> out;
  if (q < 3 || d < 1 || d >= n * (q - 1)) return out;
  const int a = d / (q - 1);
  const int b = d % (q - 1);
  if (a < 1 || a > n - 2) return out;
  auto pts = [&](ExchangeKind k) { return apply_exchange(q, n, d, k).n_points; };
  using K = ExchangeKind;
  const std::int64_t s = ipow(q, n - a - 2);
  if (b >= 1 && b < q - 2) {
    out.push_back({"N(T1)-N(T2)=2q^(n-a-2)b", pts(K::kT1) - pts(K::kT2), 2 * s * b, true});
  }
  if (b >= 2 && b < q - 2) {
    out.push_back({"N(T3)-N(T1)=q^(n-a-2)(q^2-(b+2)q-b+1)", pts(K::kT3) - pts(K::kT1),
                   s * (static_cast<std::int64_t>(q) * q - (b + 2) * q - b + 1), true});
  }
  if (b == q - 2 && b >= 2) {
    out.push_back({"N(T3)-N(T2)=q^(n-a-2)(q-1)", pts(K::kT3) - pts(K::kT2), s * (q - 1), true});
  }
  if (q == 3 && b == 1) {
    out.push_back({"N(T2)-N(T4)=3^(n-a-2)", pts(K::kT2) - pts(K::kT4), ipow(3, n - a - 2), true});
  }
  if (q >= 4 && b == 1) {
    out.push_back({"N(T4)-N(T1)=q^(n-a-1)(q-4)", pts(K::kT4) - pts(K::kT1),
                   ipow(q, n - a - 1) * (q - 4), false});
  }
  return out;
}

std::vector<ArrangementType> enumerate_types(int q, int n, int max_sum) {
  std::vector<ArrangementType> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (!current.empty()) out.emplace_back(q, n, current);
    if (static_cast<int>(current.size()) == n) return;
    for (int s = std::min(largest, remaining); s >= 1; --s) {
      current.push_back(s);
      rec(remaining - s, s);
      current.pop_back();
    }
  };
  rec(max_sum, q - 1);
  return out;
}

BestNonMaximal search_best_nonmaximal(int q, int n, int d) {
  check_degree(q, n, d);
  const ArrangementType maximal = maximal_type(q, n, d);
  std::optional<ArrangementType> best;
  std::int64_t best_n = -1;
  for (auto& t : enumerate_types(q, n, d)) {
    if (t == maximal) continue;
    const std::int64_t pts = n_points_type(t);
    bool better = pts > best_n;
    if (!better && pts == best_n) {
      if (t.hyperplanes() != best->hyperplanes()) {
        better = t.hyperplanes() > best->hyperplanes();
      } else {
        better = std::lexicographical_compare(best->blocks().begin(), best->blocks().end(),
                                              t.blocks().begin(), t.blocks().end());
      }
    }
    if (better) {
      best = t;
      best_n = pts;
    }
  }
  if (!best) throw Error(ErrorCode::kDegreeOutOfRange, "no non-maximal type exists");
  BestNonMaximal out{*best, best_n, ipow(q, n) - best_n, std::nullopt};
  for (ExchangeKind k : {ExchangeKind::kT1, ExchangeKind::kT2, ExchangeKind::kT3,
                         ExchangeKind::kT4}) {
    if (exchange_applicable(q, n, d, k) && apply_exchange(q, n, d, k).type == *best) {
      out.shape = k;
      break;
    }
  }
  return out;
}

namespace {

void check_main_range(int q, int n, int d) {
  if (q < 3 || n < 3 || d < q || d > (n - 1) * (q - 1)) {
    throw Error(ErrorCode::kDegreeOutOfRange,
                "needs q >= 3, n >= 3 and q <= d <= (n-1)(q-1); got (" + std::to_string(q) +
                    ", " + std::to_string(n) + ", " + std::to_string(d) + ")");
  }
}

}  // namespace

BestNonMaximal best_nonmaximal_type(int q, int n, int d) {
  check_main_range(q, n, d);
  return search_best_nonmaximal(q, n, d);
}

N2PrimeClosedForm n2prime_closed_form(int q, int n, int d) {
  check_main_range(q, n, d);
  const int a = d / (q - 1);
  const int b = d % (q - 1);
  ExchangeKind kind;
  std::int64_t w2;
  if (q == 3) {
    if (b == 0) {
      kind = ExchangeKind::kT1;
      w2 = 4 * ipow(3, n - a - 1);
    } else {
      kind = ExchangeKind::kT2;
      w2 = 8 * ipow(3, n - a - 2);
    }
  } else if (b == 0) {
    kind = ExchangeKind::kT1;
    w2 = 2 * ipow(q, n - a - 1) * (q - b - 1);
  } else if (b == 1) {
    kind = ExchangeKind::kT4;
    w2 = ipow(q, n - a);
  } else {
    kind = ExchangeKind::kT3;
    w2 = ipow(q, n - a - 2) * (q - 1) * (q - b + 1);
  }
  return {ipow(q, n) - w2, w2, kind};
}

}  // namespace grm
