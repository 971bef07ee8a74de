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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grm/errors.hpp"
#include "grm/ffield.hpp"
#include "grm/mpoly.hpp"

namespace grm {

// Block sizes d_1 >= ... >= d_k of an arrangement of k blocks of parallel
// hyperplanes in independent directions, 1 <= d_i <= q-1, 1 <= k <= n.
class ArrangementType {
 public:
  // Sorts the sizes; throws kInvalidType when an invariant fails.
  ArrangementType(int q, int n, std::vector<int> block_sizes);

  int q() const { return q_; }
  int n() const { return n_; }
  std::span<const int> blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int hyperplanes() const;

  std::string to_string() const;

  friend bool operator==(const ArrangementType&, const ArrangementType&) = default;

 private:
  int q_;
  int n_;
  std::vector<int> blocks_;
};

struct HyperplaneBlock {
  int direction;  // 0-based coordinate index
  std::vector<Element> constants;
};

// Concrete axis-aligned arrangement: block i is {x : x_direction = c}.
struct Arrangement {
  int q = 0;
  int n = 0;
  std::vector<HyperplaneBlock> blocks;
};

enum class ExchangeKind { kT1, kT2, kT3, kT4 };

std::string_view exchange_name(ExchangeKind kind);

// q^n - q^{n-k} prod (q - d_i)
std::int64_t n_points_type(const ArrangementType& t);

// Directions 0..k-1, block i uses the first d_i field elements.
Arrangement realize(const ArrangementType& t);

// Cardinality of the union of the hyperplanes, by grid enumeration.
std::uint64_t n_points_grid(const Arrangement& arr, std::uint64_t budget = kDefaultBudget);

// prod over hyperplanes of (X_dir - c).
MultiPoly arrangement_poly(const Arrangement& arr);

// a blocks of q-1 plus one block of b (if b > 0), d = a(q-1) + b.
ArrangementType maximal_type(int q, int n, int d);
bool is_maximal_type(const ArrangementType& t, int d);

struct ExchangeResult {
  ArrangementType type;
  std::int64_t n_points;     // from n_points_type
  std::int64_t gap_from_n1;  // N_1 - N
};

// Applies a T1..T4 exchange to the maximal configuration of degree d.
//   T1: 1 <= a <= n-1, 0 <= b < q-2  move a hyperplane from a full block to the last
//   T2: 1 <= a < n-1, 1 <= b < q-1   move a hyperplane from a full block to a new direction
//   T3: 1 <= a < n-1, 2 <= b < q-1   move a hyperplane from the last block to a new direction
//   T4: 1 <= a < n-1, b = 1          delete the last block
// Throws kExchangeNotApplicable outside those ranges.
ExchangeResult apply_exchange(int q, int n, int d, ExchangeKind kind);
bool exchange_applicable(int q, int n, int d, ExchangeKind kind);

// Closed forms for N(T_i) and N_1 - N(T_i).
struct ExchangeClosedForm {
  std::int64_t n_points;
  std::int64_t gap_from_n1;
};
ExchangeClosedForm exchange_closed_form(int q, int n, int d, ExchangeKind kind);

// One pairwise comparison between exchanges: `lhs` is the difference of
// point counts computed from the exchanged types, `rhs` the closed form.
struct ExchangeComparison {
  std::string_view name;
  std::int64_t lhs;
  std::int64_t rhs;
  bool strictly_positive;  // the closed form is asserted > 0
};

// Every comparison whose hypotheses hold at (q, n, d).
std::vector<ExchangeComparison> exchange_comparisons(int q, int n, int d);

// All types with sum of block sizes in [1, max_sum], in canonical order.
std::vector<ArrangementType> enumerate_types(int q, int n, int max_sum);

struct BestNonMaximal {
  ArrangementType type;
  std::int64_t n2prime;
  std::int64_t w2prime;
  std::optional<ExchangeKind> shape;  // the exchange producing `type`, if any
};

// Exhaustive search over every non-maximal type with at most d hyperplanes.
// Ties prefer more hyperplanes, then the lexicographically larger sizes.
BestNonMaximal search_best_nonmaximal(int q, int n, int d);

// search_best_nonmaximal restricted to q >= 3, n >= 3, q <= d <= (n-1)(q-1).
BestNonMaximal best_nonmaximal_type(int q, int n, int d);

// The N'_2 case table (T1 for b = 0; T3 for q >= 4, b >= 2; T4 for q >= 4,
// b = 1; T2 for q = 3, b = 1), with the exchange that attains it.
struct N2PrimeClosedForm {
  std::int64_t n2prime;
  std::int64_t w2prime;
  ExchangeKind attained_by;
};
N2PrimeClosedForm n2prime_closed_form(int q, int n, int d);

}  // namespace grm
