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

#include "grm/groebner.hpp"

#include <gtest/gtest.h>

#include "grm/lemma.hpp"
#include "grm/verify.hpp"

namespace grm {
namespace {

MultiPoly P(const char* text, int n, int q) { return parse_poly(text, n, make_field_ptr(q)); }

PolyBasis B(std::initializer_list<const char*> texts, int n, int q) {
  std::vector<MultiPoly> polys;
  for (const char* t : texts) polys.push_back(P(t, n, q));
  return PolyBasis(polys);
}

void expect_division_contract(const MultiPoly& f, const PolyBasis& divisors, const Division& r) {
  MultiPoly sum = r.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const MultiPoly part = r.quotients[i] * divisors[i];
    sum = sum + part;
    if (!part.is_zero()) EXPECT_FALSE(grlex_less(f.leading_monomial(), part.leading_monomial()));
  }
  EXPECT_EQ(sum, f);
  for (const Term& t : r.remainder.terms()) {
    for (const Monomial& lm : divisors.leading_monomials()) EXPECT_FALSE(lm.divides(t.mono));
  }
}

TEST(PolyBasis, RejectsZero) { EXPECT_THROW(PolyBasis({MultiPoly(make_field_ptr(3), 2)}), Error); }

TEST(Divide, Examples) {
  const MultiPoly f = P("X1^2*X2 + X2 + 1", 2, 3);
  Division r = divide(f, PolyBasis({f}));
  EXPECT_EQ(r.quotients[0], P("1", 2, 3));
  EXPECT_TRUE(r.remainder.is_zero());

  r = divide(P("X1^2*X2 + 1", 2, 3), B({"X1^2"}, 2, 3));
  EXPECT_EQ(r.quotients[0], P("X2", 2, 3));
  EXPECT_EQ(r.remainder, P("1", 2, 3));

  r = divide(P("X1^2 + X1", 1, 3), B({"X1^2 - X1"}, 1, 3));
  EXPECT_EQ(r.quotients[0], P("1", 1, 3));
  EXPECT_EQ(r.remainder, P("2*X1", 1, 3));
}

TEST(Divide, ContractOnRandomInputs) {
  Rng rng(19);
  for (int q : {2, 3, 5}) {
    const FieldPtr field = make_field_ptr(q);
    for (int s = 0; s < 40; ++s) {
      const MultiPoly f = random_reduced_poly(field, 3, 4, rng, false);
      std::vector<MultiPoly> divs;
      for (int k = 0; k < 3; ++k) divs.push_back(random_reduced_poly(field, 3, 2, rng, true));
      const PolyBasis basis(divs);
      expect_division_contract(f, basis, divide(f, basis));
    }
  }
}

TEST(SPolynomial, Examples) {
  const MultiPoly f = P("X1^2 + X2", 2, 3);
  EXPECT_TRUE(s_polynomial(f, f).is_zero());
  EXPECT_EQ(s_polynomial(f, P("X1*X2 + 1", 2, 3)), P("X2^2 + 2*X1", 2, 3));
  const PolyBasis coprime = B({"X1^2", "X2^2"}, 2, 3);
  EXPECT_TRUE(divide(s_polynomial(coprime[0], coprime[1]), coprime).remainder.is_zero());
  EXPECT_THROW(s_polynomial(f, MultiPoly(make_field_ptr(3), 2)), Error);
}

TEST(IsGroebner, Examples) {
  EXPECT_TRUE(is_groebner(B({"X1 - 1", "X2 - 1"}, 2, 3)));
  EXPECT_FALSE(is_groebner(B({"X1^2", "X2^2", "X1^3 - X1", "X2^3 - X2"}, 2, 3)));
  EXPECT_TRUE(is_groebner(B({"X1^2*X2 + X2 + 1"}, 2, 3)));
}

TEST(Buchberger, FieldEquationExample) {
  const PolyBasis g = buchberger(B({"X1^2", "X2^2", "X1^3 - X1", "X2^3 - X2"}, 2, 3));
  EXPECT_EQ(g.leading_monomials(), (std::vector<Monomial>{Monomial({1, 0}), Monomial({0, 1})}));
  EXPECT_TRUE(is_groebner(g));
  EXPECT_EQ(footprint_size(g.leading_monomials(), 3, 2).delta_size, 1u);
}

TEST(Buchberger, FixpointOnGroebnerInput) {
  const PolyBasis g = buchberger(B({"X1 - 1", "X2 - 1"}, 2, 3));
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(is_groebner(g));
}

TEST(Buchberger, IterationCap) {
  try {
    buchberger(B({"X1^2*X2 + X2^2 + 1", "X1*X2^2 + X1 + 2", "X1^3 - X1", "X2^3 - X2"}, 2, 3),
               {.max_pairs = 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIterationCapExceeded);
  }
}

TEST(Buchberger, OutputIsGroebnerAndSameIdeal) {
  Rng rng(23);
  for (int q : {2, 3, 4}) {
    const FieldPtr field = make_field_ptr(q);
    for (int s = 0; s < 15; ++s) {
      std::vector<MultiPoly> polys = {random_reduced_poly(field, 2, 3, rng, true),
                                      random_reduced_poly(field, 2, 3, rng, true)};
      const PolyBasis in(polys);
      const PolyBasis g = buchberger(in);
      EXPECT_TRUE(is_groebner(g));
      EXPECT_TRUE(is_groebner(g, false));
      for (const MultiPoly& f : in.polys()) EXPECT_TRUE(divide(f, g).remainder.is_zero());
    }
  }
}

TEST(Buchberger, CoprimeShortcutIsSound) {
  Rng rng(29);
  const FieldPtr field = make_field_ptr(3);
  int coprime_pairs = 0;
  for (int s = 0; s < 60; ++s) {
    std::vector<MultiPoly> polys = {random_reduced_poly(field, 3, 3, rng, true)};
    for (const MultiPoly& e : field_equations(field, 3)) polys.push_back(e);
    const PolyBasis g = buchberger(PolyBasis(polys));
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (!g[i].leading_monomial().coprime(g[j].leading_monomial())) continue;
        ++coprime_pairs;
        EXPECT_TRUE(divide(s_polynomial(g[i], g[j]), g).remainder.is_zero());
      }
    }
    EXPECT_EQ(is_groebner(g, true), is_groebner(g, false));
  }
  EXPECT_GT(coprime_pairs, 0);
}

TEST(Footprint, Examples) {
  EXPECT_EQ(footprint_size(std::vector<Monomial>({Monomial({2, 1})}), 3, 2).delta_size, 7u);
  EXPECT_EQ(footprint_size(std::vector<Monomial>({Monomial({1, 0, 0})}), 3, 3).delta_size, 9u);
  // X1^2 X2 and X2^2 X3 in GF(3)^3: 27 - (6 + 6 - 2).
  EXPECT_EQ(footprint_size(std::vector<Monomial>({Monomial({2, 1, 0}), Monomial({0, 2, 1})}), 3, 3).delta_size,
            17u);
}

TEST(Footprint, SingleGeneratorClosedForm) {
  for (int q : {3, 4}) {
    for (int n : {2, 3}) {
      const std::uint64_t size = checked_grid_size(q, n, kDefaultBudget);
      for (std::uint64_t i = 0; i < size; ++i) {
        std::vector<int> u(n);
        std::uint64_t x = i;
        for (int k = n - 1; k >= 0; --k, x /= q) u[k] = static_cast<int>(x % q);
        std::int64_t prod = 1;
        for (int e : u) prod *= q - e;
        const std::vector<Monomial> lms = {Monomial(u)};
        EXPECT_EQ(static_cast<std::int64_t>(footprint_size(lms, q, n).delta_size),
                  static_cast<std::int64_t>(size) - prod);
      }
    }
  }
}

TEST(RationalPoints, Examples) {
  EXPECT_EQ(rational_points(B({"X1", "X2"}, 2, 3)), 1u);
  EXPECT_EQ(rational_points(B({"X1^2", "X2^2"}, 2, 3)), 1u);
  EXPECT_EQ(rational_points(B({"X1*X2 - 1"}, 2, 5)), 4u);
}

TEST(VarietyFootprint, FootprintEqualsPoints) {
  Rng rng(1);
  const FieldPtr field = make_field_ptr(3);
  for (int n : {2, 3}) {
    for (int s = 0; s < 60; ++s) {
      const MultiPoly f = random_reduced_poly(field, n, 4, rng, false);
      const VarietyFootprint vf = variety_footprint(PolyBasis({f}));
      EXPECT_EQ(vf.footprint.delta_size, vf.points) << f.to_string();
      EXPECT_EQ(vf.points, count_points(f).zeros);
    }
  }
}

TEST(WeightLowerBound, Examples) {
  const std::vector<int> u = {2, 2, 0};
  EXPECT_EQ(weight_lower_bound(u, 3, 3, 4), 3);
  EXPECT_EQ(weight_lower_bound(u, 3, 3, 4, Monomial({2, 1, 2})), 4);
  const std::vector<int> zero = {0, 0, 0};
  EXPECT_EQ(weight_lower_bound(zero, 3, 3, 4), 27);
  const std::vector<int> bad = {3, 0, 0};
  EXPECT_THROW(weight_lower_bound(bad, 3, 3, 4), Error);
  EXPECT_THROW(weight_lower_bound(u, 3, 3, 4, Monomial({2, 2, 0})), Error);
}

TEST(WeightLowerBound, MatchesObjectivePlusW1) {
  for (int q : {3, 4}) {
    for (int n : {3, 4}) {
      for (int d = q; d <= (n - 1) * (q - 1); ++d) {
        const LemmaInstance inst = make_lemma_instance(q, n, d);
        std::vector<int> u(n, 0);
        for (int i = 0; i < inst.a; ++i) u[i] = q - 1;
        u[inst.a] = inst.b;
        const std::int64_t w1 = weight_lower_bound(u, q, n, d);
        for (const AlphaSequence& alpha : brute_force_min(inst).minimizers) {
          EXPECT_EQ(weight_lower_bound(u, q, n, d, Monomial(alpha)), w1 + objective(alpha, inst));
        }
      }
    }
  }
}

}  // namespace
}  // namespace grm
