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
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "grm/errors.hpp"
#include "grm/lemma.hpp"
#include "grm/mpoly.hpp"

namespace grm {

// Sampling uses std::mt19937_64 seeded with the 64-bit seed; a draw in
// [0, bound) is `engine() % bound`.
using Rng = std::mt19937_64;

// Reduced polynomial with uniform coefficients on every monomial of degree
// <= max_degree inside [0, q-1]^n, monomials visited in row-major exponent
// order (X1 most significant). With exact_degree, a zero top-degree part is
// repaired by setting one uniformly chosen top monomial to a uniform nonzero
// coefficient. A zero result becomes the constant 1.
MultiPoly random_reduced_poly(const FieldPtr& field, int nvars, int max_degree, Rng& rng,
                              bool exact_degree);

struct SweepConfig {
  std::optional<std::vector<int>> qs;
  std::optional<std::vector<int>> ns;
  std::optional<std::vector<int>> ds;
  std::uint64_t seed = 42;
  std::uint64_t budget = kDefaultBudget;
  std::optional<std::size_t> samples;
  // Replaces closed_form_mu in the lemma suite.
  std::function<std::int64_t(const LemmaInstance&)> mu_table;
};

struct CheckRecord {
  std::string suite;
  std::string task;
  int q = 0;
  int n = 0;
  std::optional<int> d;
  std::string computed;
  std::string oracle;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckRecord> records;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

// lemma, arrangements, dimension, footprint, sampling, all
const std::vector<std::string_view>& suite_names();

// Throws kParameterOutOfRange for an unknown suite name. Budget errors
// propagate.
SuiteResult run_suite(std::string_view suite, const SweepConfig& config);

std::string to_json(const SuiteResult& result, std::optional<std::int64_t> elapsed_ms = {});
std::string to_csv(const SuiteResult& result);

}  // namespace grm
