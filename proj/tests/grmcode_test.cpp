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

#include <gtest/gtest.h>

#include "grm/arrange.hpp"
#include "grm/lemma.hpp"

namespace grm {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kStructureMismatch;
}

TEST(GrmParams, Examples) {
  GrmParams p = grm_params(3, 3, 4);
  EXPECT_EQ(p.a, 2);
  EXPECT_EQ(p.b, 0);
  EXPECT_EQ(p.m, 27);
  EXPECT_EQ(p.k, 23);
  EXPECT_EQ(p.w1, 3);
  p = grm_params(4, 3, 5);
  EXPECT_EQ(p.a, 1);
  EXPECT_EQ(p.b, 2);
  EXPECT_EQ(p.m, 64);
  EXPECT_EQ(p.k, dimension_oracle(4, 3, 5));
  EXPECT_EQ(p.w1, 8);
  EXPECT_EQ(code_of([] { grm_params(3, 3, 6); }), ErrorCode::kDegreeOutOfRange);
  EXPECT_EQ(code_of([] { grm_params(3, 3, 0); }), ErrorCode::kDegreeOutOfRange);
  EXPECT_EQ(code_of([] { grm_params(6, 3, 2); }), ErrorCode::kUnsupportedCardinality);
}

TEST(Dimension, OracleExamples) {
  EXPECT_EQ(dimension_oracle(3, 3, 4), 23);
  EXPECT_EQ(dimension_oracle(5, 2, 0), 1);
  EXPECT_EQ(dimension_oracle(2, 3, 3), 8);
}

TEST(Dimension, FormulaMatchesOracle) {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int n = 1; n <= 5; ++n) {
      for (int d = 1; d < n * (q - 1); ++d) {
        EXPECT_EQ(grm_params(q, n, d).k, dimension_oracle(q, n, d)) << q << " " << n << " " << d;
      }
    }
  }
}

TEST(Binomial, Convention) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(SecondWeight, Examples) {
  SecondWeightResult w = second_weight(4, 3, 5);
  EXPECT_TRUE(w.exact);
  EXPECT_EQ(w.value(), 9);
  EXPECT_EQ(regime_tag(w.regime), "2<=b<q-1");
  w = second_weight(3, 4, 3);
  EXPECT_FALSE(w.exact);
  EXPECT_EQ(w.lo, 20);
  EXPECT_EQ(w.hi, 27);
  w = second_weight(3, 3, 4);
  EXPECT_TRUE(w.exact);
  EXPECT_EQ(w.value(), 4);
  EXPECT_EQ(regime_tag(w.regime), "b=0");
}

TEST(SecondWeight, IntervalAtLastSplit) {
  // b = 1, a = n-2
  const SecondWeightResult w = second_weight(5, 3, 5);
  EXPECT_FALSE(w.exact);
  EXPECT_EQ(w.lo, 23);
  EXPECT_EQ(w.hi, 25);
}

TEST(SecondWeight, SmallRegimes) {
  EXPECT_EQ(second_weight(5, 3, 1).value(), 125);
  EXPECT_EQ(second_weight(2, 5, 2).value(), 3 * 4);
  EXPECT_EQ(regime_tag(second_weight(2, 5, 2).regime), "q=2");
  // q^n - d q^{n-1} + (d-1) q^{n-2}
  EXPECT_EQ(second_weight(5, 3, 3).value(), 125 - 75 + 10);
  EXPECT_EQ(regime_tag(second_weight(5, 3, 3).regime), "d<q");
}

TEST(SecondWeight, SmallDegreeMatchesArrangement) {
  // d-1 parallel hyperplanes plus one in an independent direction.
  for (int q : {3, 4, 5, 7}) {
    for (int n = 2; n <= 4; ++n) {
      for (int d = 2; d < q; ++d) {
        const ArrangementType t(q, n, {d - 1, 1});
        EXPECT_EQ(second_weight(q, n, d).value(), ipow(q, n) - n_points_type(t));
      }
    }
  }
}

TEST(SecondWeight, NotCovered) {
  EXPECT_EQ(code_of([] { second_weight(3, 2, 3); }), ErrorCode::kRegimeNotCovered);
  EXPECT_EQ(code_of([] { second_weight(3, 3, 5); }), ErrorCode::kRegimeNotCovered);
  EXPECT_EQ(code_of([] { second_weight(2, 4, 3); }), ErrorCode::kRegimeNotCovered);
}

TEST(SecondWeight, AgreesWithBestArrangementInExactRegimes) {
  for (int q : {3, 4, 5, 7}) {
    for (int n : {3, 4, 5}) {
      for (int d = q; d <= (n - 1) * (q - 1); ++d) {
        const SecondWeightResult w = second_weight(q, n, d);
        if (!w.exact) continue;
        EXPECT_EQ(w.value(), best_nonmaximal_type(q, n, d).w2prime) << q << " " << n << " " << d;
      }
    }
  }
}

TEST(SecondWeight, LowerEndEqualsMuPlusW1) {
  for (int q : {3, 4, 5}) {
    for (int n : {3, 4}) {
      for (int d = q; d <= (n - 1) * (q - 1); ++d) {
        const SecondWeightResult w = second_weight(q, n, d);
        const LemmaInstance inst = make_lemma_instance(q, n, d);
        EXPECT_EQ(w.lo, closed_form_mu(inst) + grm_params(q, n, d).w1)
            << q << " " << n << " " << d;
      }
    }
  }
}

TEST(MaximalConfig, Examples) {
  EXPECT_EQ(count_points(maximal_config_poly(3, 3, 4)).weight, 3u);
  EXPECT_EQ(count_points(maximal_config_poly(3, 3, 3)).weight, 6u);
  EXPECT_EQ(count_points(maximal_config_poly(5, 3, 4)).weight, 25u);
  EXPECT_EQ(maximal_config_poly(3, 3, 4).degree(), 4);
}

TEST(MaximalConfig, WeightIsW1) {
  for (int q : {2, 3, 4, 5}) {
    for (int n = 1; n <= 4; ++n) {
      for (int d = 1; d < n * (q - 1); ++d) {
        EXPECT_EQ(static_cast<std::int64_t>(count_points(maximal_config_poly(q, n, d)).weight),
                  grm_params(q, n, d).w1);
      }
    }
  }
}

}  // namespace
}  // namespace grm
