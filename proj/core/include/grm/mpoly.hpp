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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grm/errors.hpp"
#include "grm/ffield.hpp"

namespace grm {

// X_1^{e_1} ... X_n^{e_n}. Exponents are unbounded; a monomial is reduced
// when every exponent is at most q-1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  static Monomial variable(int nvars, int var, int power = 1);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int operator[](int i) const { return exps_[i]; }
  int& operator[](int i) { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_reduced(int q) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(*this, other) reversed: other must divide *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

// Graded lexicographic comparison with X1 > X2 > ... > Xn: total degree
// first, then the first differing exponent decides.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

// a < b in grlex. Throws kLengthMismatch when the variable counts differ.
bool grlex_less(const Monomial& a, const Monomial& b);

struct Term {
  Element coef;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

// Polynomial over GF(q) in n variables. Terms are kept strictly decreasing in
// grlex with no zero coefficients; the zero polynomial has no terms.
class MultiPoly {
 public:
  MultiPoly(FieldPtr field, int nvars);
  // Canonicalizes: merges like monomials, drops zeros, sorts.
  MultiPoly(FieldPtr field, int nvars, std::vector<Term> terms);

  static MultiPoly constant(FieldPtr field, int nvars, Element c);
  static MultiPoly variable(FieldPtr field, int nvars, int var);
  static MultiPoly monomial(FieldPtr field, int nvars, Element c, Monomial m);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Empty for the zero polynomial, whose degree is -infinity.
  std::optional<int> degree() const;
  bool is_reduced() const;

  // Throws kZeroPolynomial on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  Element leading_coefficient() const { return leading_term().coef; }

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly scale(Element c) const;
  // c * m * this
  MultiPoly mul_term(Element c, const Monomial& m) const;
  // Divides by the leading coefficient.
  MultiPoly monic() const;

  Element evaluate(std::span<const Element> point) const;

  std::string to_string() const;

  bool operator==(const MultiPoly& other) const;

 private:
  void check_compatible(const MultiPoly& other) const;

  FieldPtr field_;
  int nvars_;
  std::vector<Term> terms_;
};

struct HypersurfaceCount {
  std::uint64_t zeros = 0;
  std::uint64_t weight = 0;
  int q = 0;
  int n = 0;
};

// Grammar: poly := ['-'] term (('+'|'-') term)*
//          term := coeff | [coeff '*'] factor ('*' factor)*
//          factor := 'X' index ['^' exp]
// coeff is an element index in 0..q-1; whitespace is ignored.
MultiPoly parse_poly(std::string_view text, int nvars, FieldPtr field);

// Replaces X_i^a (a >= q) by X_i^{((a-1) mod (q-1)) + 1}; same function on GF(q)^n.
MultiPoly reduce_poly(const MultiPoly& f);

Element evaluate(const MultiPoly& f, std::span<const Element> point);

// Values of f at every point of GF(q)^n, row-major with X1 the most
// significant coordinate. Computed as a per-axis evaluation transform of the
// dense coefficient tensor of reduce_poly(f).
std::vector<std::uint8_t> evaluate_grid(const MultiPoly& f,
                                        std::uint64_t budget = kDefaultBudget);

HypersurfaceCount count_points(const MultiPoly& f, std::uint64_t budget = kDefaultBudget);

// Throws kZeroPolynomial.
Term leading_monomial(const MultiPoly& f);

// Row-major decoding of a grid index into a point.
std::vector<Element> grid_point(std::uint64_t index, int q, int n);

}  // namespace grm
