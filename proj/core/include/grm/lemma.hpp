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
#include <string>
#include <vector>

#include "grm/errors.hpp"

namespace grm {

// The minimization behind the second-weight lower bound:
//   minimize P1 - P2 over alpha in V, with
//   P1 = prod_i (q - alpha_i),  P2 = (q - gamma) prod_{i >= a+2} (q - alpha_i),
//   gamma = max(alpha_{a+1}, b),
// where V holds the alpha in [0, q-1]^n with sum alpha <= K that are not
// divisible-shaped, i.e. alpha_1 = ... = alpha_a = q-1 forces alpha_{a+1} < b.
struct LemmaInstance {
  int q = 0;
  int n = 0;
  int d = 0;
  int a = 0;
  int b = 0;
  int budget = 0;  // K = d+1 if b = 0, d+q-b otherwise
};

// Requires q >= 3, n >= 3 and q <= d <= (n-1)(q-1); kParameterOutOfRange otherwise.
LemmaInstance make_lemma_instance(int q, int n, int d);

using AlphaSequence = std::vector<int>;

enum class VConstraint { kLength, kRange, kBudget, kHead };

std::string describe(VConstraint c);

std::optional<VConstraint> v_violation(const AlphaSequence& alpha, const LemmaInstance& inst);
inline bool in_v(const AlphaSequence& alpha, const LemmaInstance& inst) {
  return !v_violation(alpha, inst).has_value();
}

// P1 - P2. Throws kNotInV naming the violated constraint.
std::int64_t objective(const AlphaSequence& alpha, const LemmaInstance& inst);

inline constexpr std::size_t kMinimizerCap = 10'000;

struct BruteForceMin {
  std::int64_t mu = 0;
  std::vector<AlphaSequence> minimizers;  // lexicographic order
  bool truncated = false;                 // more than kMinimizerCap minimizers
  std::uint64_t v_size = 0;
};

BruteForceMin brute_force_min(const LemmaInstance& inst, std::uint64_t budget = kDefaultBudget);

// (q-2) q^{n-a-1}       if b = 0
// (q-1) q^{n-a-3}       if b = 1, a < n-2
// (q-2) q^{n-a-2}       if b = 1, a = n-2
// (b-1) q^{n-a-2}       if 2 <= b < q-1
std::int64_t closed_form_mu(const LemmaInstance& inst);

// Head alpha_1..alpha_a sorted non-increasing; tail alpha_{a+2}.. sorted when
// alpha_{a+1} < b, alpha_{a+1}.. sorted otherwise. Preserves the objective.
AlphaSequence canonicalize(const AlphaSequence& alpha, const LemmaInstance& inst);

struct CanonicalShape {
  std::string name;
  AlphaSequence alpha;
};

// Canonical minimizer candidates that fit in n coordinates:
//   "b=0"                    (q-1,..,q-1,q-2 | 2, 0, ..)
//   "b>=1, alpha_{a+1}=0"    (q-1,..,q-1 | 0, q-1, 1, 0, ..)
//   "b>=1, alpha_{a+1}>=b"   (q-1,..,q-1,q-2 | q-1, 2, 0, ..)
//   "2<=b, alpha_{a+1}=1"    (q-1,..,q-1 | 1, q-1, 0, ..)
std::vector<CanonicalShape> canonical_shapes(const LemmaInstance& inst);

struct MinimizerStructure {
  std::string shape;
  AlphaSequence witness;
  std::int64_t mu = 0;
};

// Finds a canonical shape among the brute-force minimizers (after
// canonicalize). Throws kStructureMismatch when none matches.
MinimizerStructure check_minimizer_structure(const LemmaInstance& inst,
                                             std::uint64_t budget = kDefaultBudget);

// Exhaustive checks of the structural lemmas over V.
struct PropertyReport {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string counterexample;

  bool ok() const { return violations == 0; }
};

// Objective invariant under permutations of the head, of the tail when
// alpha_{a+1} < b, and under swapping alpha_{a+1} with a later alpha_i >= b
// when alpha_{a+1} >= b.
PropertyReport check_permutation_invariance(const LemmaInstance& inst);
// alpha + e_i in V implies a strictly smaller objective.
PropertyReport check_increment_monotonicity(const LemmaInstance& inst);
// Some minimizer has sum alpha = K.
PropertyReport check_budget_attained(const LemmaInstance& inst);
// Swapping a head entry with a larger entry past the split never increases
// the objective.
PropertyReport check_split_swap(const LemmaInstance& inst);
// For 1 <= alpha_i <= alpha_j <= q-2 in the four index cases, moving one unit
// from alpha_i to alpha_j strictly decreases the objective.
PropertyReport check_balancing_move(const LemmaInstance& inst);

std::vector<PropertyReport> check_structural_lemmas(const LemmaInstance& inst);

std::string format_alpha(const AlphaSequence& alpha);

}  // namespace grm
