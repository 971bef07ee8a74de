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

#include "grm/verify.hpp"

#include <gtest/gtest.h>

namespace grm {
namespace {

SweepConfig small(std::vector<int> qs, std::vector<int> ns) {
  SweepConfig c;
  c.qs = std::move(qs);
  c.ns = std::move(ns);
  c.samples = 50;
  return c;
}

TEST(RandomPoly, DeterministicAndExactDegree) {
  const FieldPtr field = make_field_ptr(4);
  Rng a(42);
  Rng b(42);
  for (int s = 0; s < 100; ++s) {
    const MultiPoly f = random_reduced_poly(field, 3, 5, a, true);
    EXPECT_EQ(f, random_reduced_poly(field, 3, 5, b, true));
    EXPECT_EQ(f.degree(), 5);
    EXPECT_TRUE(f.is_reduced());
  }
}

TEST(RandomPoly, FirstDrawIsPinned) {
  // mt19937_64 with seed 42; draws taken modulo q over row-major exponents.
  Rng rng(42);
  const MultiPoly f = random_reduced_poly(make_field_ptr(3), 2, 1, rng, false);
  Rng ref(42);
  std::vector<std::uint64_t> draws;
  for (int i = 0; i < 3; ++i) draws.push_back(ref() % 3);
  // exponents visited: (0,0), (0,1), (1,0)
  std::vector<Term> terms;
  const Monomial order[] = {Monomial({0, 0}), Monomial({0, 1}), Monomial({1, 0})};
  for (int i = 0; i < 3; ++i) {
    if (draws[i]) terms.push_back({Element{static_cast<std::uint32_t>(draws[i])}, order[i]});
  }
  MultiPoly expected(make_field_ptr(3), 2, terms);
  if (expected.is_zero()) expected = MultiPoly::constant(make_field_ptr(3), 2, Element{1});
  EXPECT_EQ(f, expected);
}

TEST(Suites, PassOnSmallGrids) {
  for (std::string_view s : {"arrangements", "dimension", "footprint", "sampling"}) {
    const SuiteResult r = run_suite(s, small({3, 4}, {3}));
    EXPECT_FALSE(r.records.empty()) << s;
    EXPECT_TRUE(r.passed()) << s;
  }
  EXPECT_TRUE(run_suite("lemma", small({3}, {3, 4})).passed());
}

TEST(Suites, LemmaFlagsLastSplitCells) {
  const SuiteResult r = run_suite("lemma", small({4}, {3}));
  std::vector<std::string> failed;
  for (const CheckRecord& c : r.records) {
    if (!c.pass) failed.push_back(c.task + " d=" + std::to_string(c.d.value_or(-1)));
  }
  EXPECT_EQ(failed, (std::vector<std::string>{"mu d=4", "minimizer_shape d=4",
                                              "minimum attained at sum = K d=4"}));
}

TEST(Suites, CorruptedMuTableFails) {
  SweepConfig c = small({3}, {3, 4});
  c.mu_table = [](const LemmaInstance& inst) {
    return closed_form_mu(inst) + (inst.d == 4 ? 1 : 0);
  };
  const SuiteResult r = run_suite("lemma", c);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures(), 2u);  // (3,3,4) and (3,4,4)
}

TEST(Suites, DeterministicReports) {
  SweepConfig c = small({3}, {2, 3});
  c.seed = 9;
  EXPECT_EQ(to_json(run_suite("all", c)), to_json(run_suite("all", c)));
  EXPECT_EQ(to_csv(run_suite("footprint", c)), to_csv(run_suite("footprint", c)));
}

TEST(Suites, SeedChangesSamples) {
  SweepConfig a = small({3}, {2});
  SweepConfig b = a;
  b.seed = a.seed + 1;
  EXPECT_NE(to_json(run_suite("footprint", a)), to_json(run_suite("footprint", b)));
}

TEST(Suites, UnknownName) { EXPECT_THROW(run_suite("nope", SweepConfig{}), Error); }

TEST(Suites, CsvHeader) {
  const std::string csv = to_csv(run_suite("dimension", small({2}, {2})));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "suite,task,q,n,d,computed,oracle,pass");
}

TEST(Suites, JsonTimingOnlyWhenRequested) {
  const SuiteResult r = run_suite("dimension", small({2}, {2}));
  EXPECT_EQ(to_json(r).find("elapsed_ms"), std::string::npos);
  EXPECT_NE(to_json(r, 5).find("\"elapsed_ms\": 5"), std::string::npos);
}

}  // namespace
}  // namespace grm
