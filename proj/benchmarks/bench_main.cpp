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

#include <benchmark/benchmark.h>

#include "grm/arrange.hpp"
#include "grm/groebner.hpp"
#include "grm/grmcode.hpp"
#include "grm/lemma.hpp"
#include "grm/verify.hpp"

namespace {

void BM_CountPoints(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  grm::Rng rng(1);
  const grm::MultiPoly f =
      grm::random_reduced_poly(grm::make_field_ptr(q), n, n * (q - 1) / 2, rng, true);
  for (auto _ : state) benchmark::DoNotOptimize(grm::count_points(f));
  state.SetItemsProcessed(state.iterations() * grm::ipow(q, n));
}
BENCHMARK(BM_CountPoints)->Args({3, 5})->Args({4, 5})->Args({7, 4})->Args({9, 5});

void BM_Buchberger(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const grm::FieldPtr field = grm::make_field_ptr(q);
  grm::Rng rng(7);
  std::vector<grm::PolyBasis> inputs;
  for (int i = 0; i < 16; ++i) {
    std::vector<grm::MultiPoly> polys = {grm::random_reduced_poly(field, n, 4, rng, false)};
    for (auto& e : grm::field_equations(field, n)) polys.push_back(e);
    inputs.emplace_back(polys);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(grm::buchberger(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_Buchberger)->Args({3, 2})->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_BruteForceMin(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const grm::LemmaInstance inst = grm::make_lemma_instance(q, n, (n - 1) * (q - 1));
  for (auto _ : state) benchmark::DoNotOptimize(grm::brute_force_min(inst));
  state.SetItemsProcessed(state.iterations() * grm::ipow(q, n));
}
BENCHMARK(BM_BruteForceMin)->Args({5, 5})->Args({9, 5})->Unit(benchmark::kMillisecond);

void BM_BestNonMaximal(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grm::best_nonmaximal_type(q, 5, 3 * (q - 1)));
}
BENCHMARK(BM_BestNonMaximal)->Arg(4)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
