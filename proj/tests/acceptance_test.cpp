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

// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "grm/arrange.hpp"
#include "grm/groebner.hpp"
#include "grm/grmcode.hpp"
#include "grm/lemma.hpp"
#include "grm/verify.hpp"

namespace {

using namespace grm;

struct Outcome {
  std::uint64_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void expect_eq(std::int64_t got, std::int64_t want, const std::string& what) {
    expect(got == want, what + ": " + std::to_string(got) + " != " + std::to_string(want));
  }
};

std::string cell(int q, int n, int d) {
  return "(" + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(d) + ")";
}

const std::vector<int> kLemmaQ = {3, 4, 5, 7, 8, 9};
const std::vector<int> kLemmaN = {3, 4, 5};

// Calls fn(q, n, d) on q <= d <= (n-1)(q-1).
void for_main_range(const std::vector<int>& qs, const std::vector<int>& ns,
                    const std::function<void(int, int, int)>& fn) {
  for (int q : qs)
    for (int n : ns)
      for (int d = q; d <= (n - 1) * (q - 1); ++d) fn(q, n, d);
}

Outcome lemma_sweep() {
  Outcome o;
  for_main_range(kLemmaQ, kLemmaN, [&](int q, int n, int d) {
    const LemmaInstance inst = make_lemma_instance(q, n, d);
    o.expect_eq(brute_force_min(inst).mu, closed_form_mu(inst), "mu " + cell(q, n, d));
  });
  return o;
}

Outcome arrangement_formula() {
  Outcome o;
  for (int q : {3, 4, 5}) {
    for (int n : {3, 4}) {
      for (const ArrangementType& t : enumerate_types(q, n, n * (q - 1))) {
        o.expect_eq(static_cast<std::int64_t>(n_points_grid(realize(t))), n_points_type(t),
                    t.to_string() + " q=" + std::to_string(q) + " n=" + std::to_string(n));
      }
    }
  }
  return o;
}

Outcome exchange_closed_forms() {
  Outcome o;
  for_main_range(kLemmaQ, kLemmaN, [&](int q, int n, int d) {
    for (ExchangeKind kind :
         {ExchangeKind::kT1, ExchangeKind::kT2, ExchangeKind::kT3, ExchangeKind::kT4}) {
      if (!exchange_applicable(q, n, d, kind)) continue;
      const std::string tag = std::string(exchange_name(kind)) + " " + cell(q, n, d);
      const ExchangeResult r = apply_exchange(q, n, d, kind);
      const ExchangeClosedForm cf = exchange_closed_form(q, n, d, kind);
      o.expect_eq(r.n_points, cf.n_points, tag + " N");
      o.expect_eq(r.gap_from_n1, cf.gap_from_n1, tag + " N1-N");
      o.expect(r.gap_from_n1 > 0, tag + " N1-N > 0");
    }
    for (const ExchangeComparison& c : exchange_comparisons(q, n, d)) {
      const std::string tag = std::string(c.name) + " " + cell(q, n, d);
      o.expect_eq(c.lhs, c.rhs, tag);
      if (c.strictly_positive) o.expect(c.lhs > 0, tag + " > 0");
    }
  });
  return o;
}

Outcome n2prime_case_table() {
  Outcome o;
  for_main_range({3, 4, 5, 7}, kLemmaN, [&](int q, int n, int d) {
    const BestNonMaximal best = best_nonmaximal_type(q, n, d);
    const N2PrimeClosedForm cf = n2prime_closed_form(q, n, d);
    o.expect_eq(best.n2prime, cf.n2prime, "N'2 " + cell(q, n, d));
    o.expect_eq(best.w2prime, cf.w2prime, "W'2 " + cell(q, n, d));
    const ArrangementType top = maximal_type(q, n, d);
    for (const ArrangementType& t : enumerate_types(q, n, d)) {
      if (t == top) continue;
      o.expect(n_points_type(t) <= cf.n2prime, t.to_string() + " exceeds N'2 at " + cell(q, n, d));
    }
  });
  return o;
}

Outcome second_weight_bridge() {
  Outcome o;
  for_main_range({3, 4, 5, 7}, kLemmaN, [&](int q, int n, int d) {
    const SecondWeightResult w = second_weight(q, n, d);
    const GrmParams p = grm_params(q, n, d);
    const std::int64_t mu = closed_form_mu(make_lemma_instance(q, n, d));
    const std::string at = cell(q, n, d);
    if (w.exact) {
      o.expect_eq(w.value(), ipow(q, n) - n2prime_closed_form(q, n, d).n2prime, "q^n - N'2 " + at);
      o.expect_eq(w.value(), ipow(q, n) - best_nonmaximal_type(q, n, d).n2prime,
                  "q^n - searched N'2 " + at);
      o.expect_eq(w.value(), mu + p.w1, "mu + W1 " + at);
      return;
    }
    const int e = n - p.a;
    const std::int64_t lo = p.a < n - 2
                                ? ipow(q, e) - ipow(q, e - 1) + ipow(q, e - 2) - ipow(q, e - 3)
                                : static_cast<std::int64_t>(q) * q - 2;
    o.expect_eq(w.lo, lo, "b=1 lower end " + at);
    o.expect_eq(w.hi, ipow(q, e), "b=1 upper end " + at);
    o.expect_eq(w.lo, mu + p.w1, "b=1 lower end = mu + W1 " + at);
  });
  return o;
}

Outcome footprint_points() {
  Outcome o;
  Rng rng(42);
  const FieldPtr field = make_field_ptr(3);
  for (int n : {2, 3}) {
    for (int s = 0; s < 100; ++s) {
      const MultiPoly f = random_reduced_poly(field, n, 4, rng, false);
      const VarietyFootprint vf = variety_footprint(PolyBasis({f}));
      o.expect_eq(static_cast<std::int64_t>(vf.footprint.delta_size),
                  static_cast<std::int64_t>(rational_points(PolyBasis({f}))), f.to_string());
    }
  }
  return o;
}

Outcome dimension() {
  Outcome o;
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int n = 1; n <= 5; ++n) {
      for (int d = 1; d < n * (q - 1); ++d) {
        o.expect_eq(grm_params(q, n, d).k, dimension_oracle(q, n, d), "k " + cell(q, n, d));
      }
    }
  }
  return o;
}

Outcome min_distance_witness() {
  Outcome o;
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int n = 1; n <= 5; ++n) {
      if (ipow(q, n) > 1'000'000) continue;
      for (int d = 1; d < n * (q - 1); ++d) {
        o.expect_eq(static_cast<std::int64_t>(count_points(maximal_config_poly(q, n, d)).weight),
                    grm_params(q, n, d).w1, "W1 " + cell(q, n, d));
      }
    }
  }
  return o;
}

Outcome falsification_sampling() {
  Outcome o;
  Rng rng(42);
  for (auto [q, n, d] : {std::tuple{3, 3, 4}, std::tuple{4, 3, 5}}) {
    const FieldPtr field = make_field_ptr(q);
    const std::int64_t w1 = grm_params(q, n, d).w1;
    const SecondWeightResult w2 = second_weight(q, n, d);
    for (int s = 0; s < 10'000; ++s) {
      const MultiPoly f = random_reduced_poly(field, n, d, rng, true);
      const auto w = static_cast<std::int64_t>(count_points(f).weight);
      o.expect(w == 0 || w == w1 || w >= w2.lo,
               f.to_string() + " has weight " + std::to_string(w) + " at " + cell(q, n, d));
    }
    const ArrangementType t = best_nonmaximal_type(q, n, d).type;
    const MultiPoly g = arrangement_poly(realize(t));
    o.expect_eq(g.degree().value_or(-1), d, "degree of " + t.to_string());
    o.expect_eq(static_cast<std::int64_t>(count_points(g).weight), w2.value(),
                "weight of " + t.to_string() + " at " + cell(q, n, d));
  }
  return o;
}

Outcome minimizer_structure() {
  Outcome o;
  for_main_range(kLemmaQ, kLemmaN, [&](int q, int n, int d) {
    try {
      check_minimizer_structure(make_lemma_instance(q, n, d));
      o.expect(true, "");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kStructureMismatch) throw;
      o.expect(false, "shape " + cell(q, n, d));
    }
  });
  for_main_range({3, 4}, {3, 4}, [&](int q, int n, int d) {
    for (const PropertyReport& r : check_structural_lemmas(make_lemma_instance(q, n, d))) {
      o.expect(r.ok(), r.name + " " + cell(q, n, d) + " " + r.counterexample);
    }
  });
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "lemma sweep: brute-force mu = closed-form mu", 60, lemma_sweep},
      {2, "arrangement point count: formula = grid", 60, arrangement_formula},
      {3, "exchange closed forms and comparisons", 5, exchange_closed_forms},
      {4, "best non-maximal type = N'2 case table", 10, n2prime_case_table},
      {5, "second-weight bridging", 5, second_weight_bridge},
      {6, "footprint = rational points", 120, footprint_points},
      {7, "dimension formula = monomial count", 5, dimension},
      {8, "maximal configuration has weight W1", 60, min_distance_witness},
      {9, "falsification sampling", 120, falsification_sampling},
      {10, "minimizer shapes and structural lemmas", 60, minimizer_structure},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && o.failures.empty() && secs <= c.limit_s;
    failed += !ok;
    std::printf("[%s] %2d %s: %llu checks, %zu failed, %.2fs (limit %.0fs)", ok ? "PASS" : "FAIL",
                c.id, c.name, static_cast<unsigned long long>(o.checks), o.failures.size(), secs,
                c.limit_s);
    if (!error.empty()) std::printf("; error: %s", error.c_str());
    for (std::size_t i = 0; i < o.failures.size() && i < 20; ++i) {
      std::printf("%s%s", i ? "; " : "; ", o.failures[i].c_str());
    }
    if (o.failures.size() > 20) std::printf("; ...");
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed ? 1 : 0;
}
