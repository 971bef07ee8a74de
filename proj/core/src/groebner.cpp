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

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace grm {

PolyBasis::PolyBasis(std::vector<MultiPoly> polys) {
  for (auto& f : polys) push_back(std::move(f));
}

void PolyBasis::push_back(MultiPoly f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "basis members must be nonzero");
  if (!polys_.empty() &&
      (f.nvars() != polys_.front().nvars() || !(f.field() == polys_.front().field()))) {
    throw Error(ErrorCode::kLengthMismatch, "basis members must share one ring");
  }
  polys_.push_back(std::move(f));
}

std::vector<Monomial> PolyBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(polys_.size());
  for (const auto& f : polys_) out.push_back(f.leading_monomial());
  return out;
}

namespace {

// p[from..] - c * m * d, merged in grlex-descending order.
std::vector<Term> subtract_multiple(std::vector<Term>&& p, std::size_t from,
                                    const MultiPoly& d, Element c, const Monomial& m) {
  const Field& F = d.field();
  std::vector<Term> out;
  out.reserve(p.size() - from + d.size());
  auto i = p.begin() + static_cast<std::ptrdiff_t>(from);
  auto j = d.terms().begin();
  const auto jend = d.terms().end();
  std::optional<Term> next;
  auto load = [&]() {
    next.reset();
    if (j != jend) next = Term{F.neg(F.mul(j->coef, c)), j->mono * m};
  };
  load();
  while (i != p.end() || next) {
    const int cmp = !next ? 1 : (i == p.end() ? -1 : (grlex_compare(i->mono, next->mono) > 0
                                                          ? 1
                                                          : (i->mono == next->mono ? 0 : -1)));
    if (cmp > 0) {
      out.push_back(std::move(*i++));
    } else if (cmp < 0) {
      out.push_back(std::move(*next));
      ++j;
      load();
    } else {
      const Element sum = F.add(i->coef, next->coef);
      if (sum.index != 0) out.push_back({sum, std::move(i->mono)});
      ++i;
      ++j;
      load();
    }
  }
  return out;
}

}  // namespace

Division divide(const MultiPoly& f, const PolyBasis& divisors) {
  const FieldPtr& field = f.field_ptr();
  const Field& F = *field;
  std::vector<std::vector<Term>> quotients(divisors.size());
  std::vector<Term> remainder;
  std::vector<Term> p(f.terms().begin(), f.terms().end());
  std::size_t head = 0;  // p[head..] is the running dividend
  while (head < p.size()) {
    const Term& lt = p[head];
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& dl = divisors[i].leading_term();
      if (!dl.mono.divides(lt.mono)) continue;
      const Element c = F.div(lt.coef, dl.coef);
      const Monomial m = lt.mono / dl.mono;
      quotients[i].push_back({c, m});
      p = subtract_multiple(std::move(p), head, divisors[i], c, m);
      head = 0;
      divided = true;
      break;
    }
    if (!divided) remainder.push_back(std::move(p[head++]));
  }
  Division out{{}, MultiPoly(field, f.nvars(), std::move(remainder))};
  out.quotients.reserve(divisors.size());
  for (auto& q : quotients) out.quotients.emplace_back(field, f.nvars(), std::move(q));
  return out;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Term& tf = f.leading_term();
  const Term& tg = g.leading_term();
  const Field& F = f.field();
  const Monomial l = tf.mono.lcm(tg.mono);
  return f.mul_term(F.inv(tf.coef), l / tf.mono) - g.mul_term(F.inv(tg.coef), l / tg.mono);
}

bool is_groebner(const PolyBasis& basis, bool use_coprime_criterion) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (use_coprime_criterion &&
          basis[i].leading_monomial().coprime(basis[j].leading_monomial())) {
        continue;
      }
      if (!divide(s_polynomial(basis[i], basis[j]), basis).remainder.is_zero()) return false;
    }
  }
  return true;
}

PolyBasis buchberger(const PolyBasis& basis, BuchbergerOptions options) {
  if (basis.empty()) throw Error(ErrorCode::kZeroPolynomial, "empty basis");
  PolyBasis g;
  for (const auto& f : basis.polys()) g.push_back(f.monic());

  using Pair = std::pair<std::size_t, std::size_t>;
  std::deque<Pair> pairs;
  std::set<Pair> pending;
  auto enqueue = [&](std::size_t i, std::size_t j) {
    pairs.emplace_back(i, j);
    pending.emplace(i, j);
  };
  auto is_pending = [&](std::size_t i, std::size_t j) {
    return pending.contains({std::min(i, j), std::max(i, j)});
  };
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) enqueue(i, j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > options.max_pairs) {
      throw Error(ErrorCode::kIterationCapExceeded,
                  "more than " + std::to_string(options.max_pairs) + " S-pairs");
    }
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    pending.erase({i, j});
    const Monomial& li = g[i].leading_monomial();
    const Monomial& lj = g[j].leading_monomial();
    if (li.coprime(lj)) continue;
    // Chain criterion: S(i, j) reduces to zero once (i, k) and (j, k) have.
    const Monomial l = li.lcm(lj);
    bool chained = false;
    for (std::size_t k = 0; k < g.size() && !chained; ++k) {
      chained = k != i && k != j && g[k].leading_monomial().divides(l) && !is_pending(i, k) &&
                !is_pending(j, k);
    }
    if (chained) continue;
    MultiPoly r = divide(s_polynomial(g[i], g[j]), g).remainder;
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    const std::size_t k = g.size() - 1;
    for (std::size_t m = 0; m < k; ++m) enqueue(m, k);
  }

  // Minimal basis: drop members whose leading monomial is a multiple of an
  // earlier (or strictly smaller) leading monomial.
  const auto lms = g.leading_monomials();
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (j == i || !lms[j].divides(lms[i])) continue;
      redundant = !(lms[j] == lms[i]) || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = others.empty() ? minimal[i] : divide(minimal[i], PolyBasis(others)).remainder;
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return grlex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return PolyBasis(std::move(reduced));
}

std::vector<MultiPoly> field_equations(const FieldPtr& field, int nvars) {
  std::vector<MultiPoly> out;
  const Element minus_one = field->neg(field->one());
  for (int i = 0; i < nvars; ++i) {
    std::vector<Term> terms;
    terms.push_back({field->one(), Monomial::variable(nvars, i, field->q())});
    terms.push_back({minus_one, Monomial::variable(nvars, i, 1)});
    out.emplace_back(field, nvars, std::move(terms));
  }
  return out;
}

FootprintReport footprint_size(std::span<const Monomial> lms, int q, int n,
                               std::uint64_t budget) {
  for (const auto& m : lms) {
    if (m.nvars() != n) {
      throw Error(ErrorCode::kLengthMismatch,
                  "monomial " + m.to_string() + " is not in " + std::to_string(n) + " variables");
    }
  }
  const std::uint64_t size = checked_grid_size(q, n, budget);
  FootprintReport report;
  report.generators_lm.assign(lms.begin(), lms.end());
  report.box_bound = q;
  Monomial beta(n);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    const bool covered =
        std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) { return m.divides(beta); });
    if (!covered) ++report.delta_size;
    for (int i = n - 1; i >= 0; --i) {
      if (++beta[i] < q) break;
      beta[i] = 0;
    }
  }
  return report;
}

std::uint64_t rational_points(const PolyBasis& basis, std::uint64_t budget) {
  if (basis.empty()) throw Error(ErrorCode::kZeroPolynomial, "empty basis");
  const int q = basis[0].field().q();
  const int n = basis[0].nvars();
  std::vector<std::uint8_t> common(checked_grid_size(q, n, budget), 1);
  for (const auto& f : basis.polys()) {
    const auto values = evaluate_grid(f, budget);
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] != 0) common[i] = 0;
  }
  return static_cast<std::uint64_t>(std::count(common.begin(), common.end(), 1));
}

VarietyFootprint variety_footprint(const PolyBasis& polys, BuchbergerOptions options,
                                   std::uint64_t budget) {
  if (polys.empty()) throw Error(ErrorCode::kZeroPolynomial, "empty basis");
  const FieldPtr& field = polys[0].field_ptr();
  const int n = polys[0].nvars();
  checked_grid_size(field->q(), n, budget);
  PolyBasis ideal = polys;
  for (auto& eq : field_equations(field, n)) ideal.push_back(std::move(eq));

  VarietyFootprint out;
  out.groebner_basis = buchberger(ideal, options);
  const auto lms = out.groebner_basis.leading_monomials();
  out.footprint = footprint_size(lms, field->q(), n, budget);
  out.points = rational_points(polys, budget);
  return out;
}

std::int64_t weight_lower_bound(std::span<const int> u, int q, int n, int d,
                                const std::optional<Monomial>& extra) {
  if (static_cast<int>(u.size()) != n) {
    throw Error(ErrorCode::kLengthMismatch, "exponent vector length differs from n");
  }
  for (int e : u) {
    if (e < 0 || e >= q) {
      throw Error(ErrorCode::kInvalidExponent,
                  "exponent " + std::to_string(e) + " outside [0, " + std::to_string(q - 1) + "]");
    }
  }
  if (!extra) {
    std::int64_t bound = 1;
    for (int e : u) bound *= q - e;
    return bound;
  }

  if (q < 3 || d < 1) throw Error(ErrorCode::kInvalidExponent, "needs q >= 3 and d >= 1");
  const int a = d / (q - 1);
  const int b = d % (q - 1);
  if (a < 1 || a > n - 1) {
    throw Error(ErrorCode::kInvalidExponent, "d must satisfy q-1 <= d < n(q-1)");
  }
  for (int i = 0; i < n; ++i) {
    const int expected = i < a ? q - 1 : (i == a ? b : 0);
    if (u[i] != expected) {
      throw Error(ErrorCode::kInvalidExponent,
                  "a remainder monomial only arises when lm(F) is X1^{q-1}..Xa^{q-1}X_{a+1}^b");
    }
  }
  const Monomial& m = *extra;
  if (m.nvars() != n) throw Error(ErrorCode::kLengthMismatch, "M has the wrong variable count");
  int total = 0;
  bool head_full = true;
  for (int i = 0; i < n; ++i) {
    if (m[i] < 0 || m[i] > q - 1) {
      throw Error(ErrorCode::kInvalidExponent, "M is not reduced: " + m.to_string());
    }
    total += m[i];
    if (i < a && m[i] != q - 1) head_full = false;
  }
  const int budget = b == 0 ? d + 1 : d + q - b;
  if (total > budget) {
    throw Error(ErrorCode::kInvalidExponent,
                "deg M = " + std::to_string(total) + " exceeds " + std::to_string(budget));
  }
  if (head_full && m[a] >= b) {
    throw Error(ErrorCode::kInvalidExponent, "lm(F) divides M = " + m.to_string());
  }

  const int gamma = std::max(b, m[a]);
  std::int64_t p1 = 1;
  for (int i = 0; i < n; ++i) p1 *= q - m[i];
  std::int64_t p2 = q - gamma;
  for (int i = a + 1; i < n; ++i) p2 *= q - m[i];
  return static_cast<std::int64_t>(q - b) * ipow(q, n - a - 1) + p1 - p2;
}

}  // namespace grm
