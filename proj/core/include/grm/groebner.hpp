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
#include <vector>

#include "grm/errors.hpp"
#include "grm/mpoly.hpp"

namespace grm {

// Ordered list of nonzero polynomials over one ring.
class PolyBasis {
 public:
  PolyBasis() = default;
  explicit PolyBasis(std::vector<MultiPoly> polys);

  std::span<const MultiPoly> polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }
  bool empty() const { return polys_.empty(); }
  const MultiPoly& operator[](std::size_t i) const { return polys_[i]; }
  void push_back(MultiPoly f);

  std::vector<Monomial> leading_monomials() const;

 private:
  std::vector<MultiPoly> polys_;
};

struct Division {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
};

// Multivariate division in grlex. The leading term of the running dividend
// goes to the first divisor (lowest index) whose leading term divides it,
// otherwise to the remainder.
Division divide(const MultiPoly& f, const PolyBasis& divisors);

// (L / lt f) f - (L / lt g) g with L = lcm(lm f, lm g).
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

// Every S-pair reduces to 0 modulo the basis in list order. Pairs with
// coprime leading monomials are skipped unless `use_coprime_criterion` is off.
bool is_groebner(const PolyBasis& basis, bool use_coprime_criterion = true);

struct BuchbergerOptions {
  std::size_t max_pairs = 200'000;
};

// Completes the basis with a FIFO pair queue, the coprime criterion and the
// chain criterion, then
// returns the reduced basis: minimal, inter-reduced, monic, sorted by
// descending leading monomial.
PolyBasis buchberger(const PolyBasis& basis, BuchbergerOptions options = {});

// X_i^q - X_i for i = 1..n.
std::vector<MultiPoly> field_equations(const FieldPtr& field, int nvars);

struct FootprintReport {
  std::vector<Monomial> generators_lm;
  std::uint64_t delta_size = 0;
  int box_bound = 0;
};

// Counts exponent vectors in [0, q-1]^n divisible by none of `lms`. The box
// plays the role of the X_i^q generators.
FootprintReport footprint_size(std::span<const Monomial> lms, int q, int n,
                               std::uint64_t budget = kDefaultBudget);

// Common zeros of the basis in GF(q)^n.
std::uint64_t rational_points(const PolyBasis& basis, std::uint64_t budget = kDefaultBudget);

struct VarietyFootprint {
  PolyBasis groebner_basis;
  FootprintReport footprint;
  std::uint64_t points = 0;
};

// Appends the field equations to `polys`, completes to a Groebner basis and
// returns its footprint next to the directly counted rational points.
VarietyFootprint variety_footprint(const PolyBasis& polys, BuchbergerOptions options = {},
                                   std::uint64_t budget = kDefaultBudget);

// Footprint lower bound on W(F) for a polynomial with leading exponent `u`:
// without `extra`, prod (q - u_i); with extra monomial M = X^alpha (the
// leading monomial of a nonzero remainder),
//   (q-b) q^{n-a-1} + prod (q - alpha_i) - (q - gamma) prod_{i>=a+2} (q - alpha_i)
// where d = a(q-1)+b and gamma = max(b, alpha_{a+1}).
std::int64_t weight_lower_bound(std::span<const int> u, int q, int n, int d,
                                const std::optional<Monomial>& extra = std::nullopt);

}  // namespace grm
