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

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "grm/arrange.hpp"
#include "grm/groebner.hpp"
#include "grm/grmcode.hpp"

namespace grm {

namespace {

using json = nlohmann::ordered_json;

struct Grid {
  std::vector<int> qs;
  std::vector<int> ns;
  std::size_t samples;
};

Grid default_grid(std::string_view suite) {
  if (suite == "lemma") return {{3, 4, 5, 7, 8, 9}, {3, 4, 5}, 0};
  if (suite == "arrangements") return {{3, 4, 5}, {3, 4}, 0};
  if (suite == "dimension") return {{2, 3, 4, 5, 7, 8, 9}, {1, 2, 3, 4, 5}, 0};
  if (suite == "footprint") return {{3}, {2, 3}, 100};
  return {{3, 4}, {3}, 10'000};
}

Grid resolve(std::string_view suite, const SweepConfig& config) {
  Grid g = default_grid(suite);
  if (config.qs) g.qs = *config.qs;
  if (config.ns) g.ns = *config.ns;
  if (config.samples) g.samples = *config.samples;
  return g;
}

bool main_range(int q, int n, int d) {
  return q >= 3 && n >= 3 && d >= q && d <= (n - 1) * (q - 1);
}

// d values in [lo, hi], restricted to the explicit list when one is given.
std::vector<int> degrees(const SweepConfig& config, int lo, int hi) {
  std::vector<int> out;
  for (int d = lo; d <= hi; ++d) {
    if (config.ds && std::find(config.ds->begin(), config.ds->end(), d) == config.ds->end()) {
      continue;
    }
    out.push_back(d);
  }
  return out;
}

class Recorder {
 public:
  explicit Recorder(SuiteResult& out) : out_(out) {}

  void check(std::string task, int q, int n, std::optional<int> d, std::int64_t computed,
             std::int64_t oracle) {
    add(std::move(task), q, n, d, std::to_string(computed), std::to_string(oracle),
        computed == oracle);
  }

  void add(std::string task, int q, int n, std::optional<int> d, std::string computed,
           std::string oracle, bool pass) {
    out_.records.push_back(
        {out_.suite, std::move(task), q, n, d, std::move(computed), std::move(oracle), pass});
  }

 private:
  SuiteResult& out_;
};

void lemma_suite(const SweepConfig& config, SuiteResult& out) {
  const Grid g = resolve("lemma", config);
  Recorder rec(out);
  for (int q : g.qs) {
    for (int n : g.ns) {
      if (q < 3 || n < 3) continue;
      for (int d : degrees(config, q, (n - 1) * (q - 1))) {
        const LemmaInstance inst = make_lemma_instance(q, n, d);
        const BruteForceMin bf = brute_force_min(inst, config.budget);
        const std::int64_t table = config.mu_table ? config.mu_table(inst) : closed_form_mu(inst);
        rec.check("mu", q, n, d, bf.mu, table);
        try {
          const MinimizerStructure s = check_minimizer_structure(inst, config.budget);
          rec.add("minimizer_shape", q, n, d, s.shape + " " + format_alpha(s.witness),
                  "canonical shape", true);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kStructureMismatch) throw;
          rec.add("minimizer_shape", q, n, d, e.what(), "canonical shape", false);
        }
        if (checked_grid_size(q, n, config.budget) > 256) continue;
        for (const PropertyReport& r : check_structural_lemmas(inst)) {
          rec.add(r.name, q, n, d,
                  std::to_string(r.violations) + " of " + std::to_string(r.checked) +
                      (r.ok() ? "" : ", e.g. " + r.counterexample),
                  "0 violations", r.ok());
        }
      }
    }
  }
}

void arrangement_suite(const SweepConfig& config, SuiteResult& out) {
  const Grid g = resolve("arrangements", config);
  Recorder rec(out);
  for (int q : g.qs) {
    for (int n : g.ns) {
      if (q < 2 || n < 1) continue;
      for (const ArrangementType& t : enumerate_types(q, n, n * (q - 1))) {
        rec.check("n_points " + t.to_string(), q, n, std::nullopt,
                  static_cast<std::int64_t>(n_points_grid(realize(t), config.budget)),
                  n_points_type(t));
      }
      for (int d : degrees(config, q, (n - 1) * (q - 1))) {
        if (!main_range(q, n, d)) continue;
        for (ExchangeKind kind :
             {ExchangeKind::kT1, ExchangeKind::kT2, ExchangeKind::kT3, ExchangeKind::kT4}) {
          if (!exchange_applicable(q, n, d, kind)) continue;
          const ExchangeResult r = apply_exchange(q, n, d, kind);
          const ExchangeClosedForm cf = exchange_closed_form(q, n, d, kind);
          const std::string name(exchange_name(kind));
          rec.check(name + " n_points", q, n, d, r.n_points, cf.n_points);
          rec.check(name + " gap", q, n, d, r.gap_from_n1, cf.gap_from_n1);
          if (kind != ExchangeKind::kT4) {
            rec.add(name + " gap > 0", q, n, d, std::to_string(r.gap_from_n1), "> 0",
                    r.gap_from_n1 > 0);
          }
        }
        for (const ExchangeComparison& c : exchange_comparisons(q, n, d)) {
          rec.check(std::string(c.name), q, n, d, c.lhs, c.rhs);
          if (c.strictly_positive) {
            rec.add(std::string(c.name) + " > 0", q, n, d, std::to_string(c.lhs), "> 0",
                    c.lhs > 0);
          }
        }
        const BestNonMaximal best = best_nonmaximal_type(q, n, d);
        const N2PrimeClosedForm cf = n2prime_closed_form(q, n, d);
        rec.check("n2prime " + best.type.to_string(), q, n, d, best.n2prime, cf.n2prime);
        rec.check("w2prime", q, n, d, best.w2prime, cf.w2prime);
        rec.check("n2prime attained by " + std::string(exchange_name(cf.attained_by)), q, n,
                  d, apply_exchange(q, n, d, cf.attained_by).n_points, cf.n2prime);
      }
    }
  }
}

void dimension_suite(const SweepConfig& config, SuiteResult& out) {
  const Grid g = resolve("dimension", config);
  Recorder rec(out);
  for (int q : g.qs) {
    for (int n : g.ns) {
      for (int d : degrees(config, 1, n * (q - 1) - 1)) {
        const GrmParams p = grm_params(q, n, d);
        rec.check("k", q, n, d, p.k, dimension_oracle(q, n, d));
        if (ipow(q, n) > 1'000'000) continue;
        const HypersurfaceCount c = count_points(maximal_config_poly(q, n, d), config.budget);
        rec.check("w1 witness", q, n, d, static_cast<std::int64_t>(c.weight), p.w1);
      }
    }
  }
}

void footprint_suite(const SweepConfig& config, SuiteResult& out) {
  const Grid g = resolve("footprint", config);
  Recorder rec(out);
  Rng rng(config.seed);
  for (int q : g.qs) {
    const FieldPtr field = make_field_ptr(q);
    for (int n : g.ns) {
      for (std::size_t s = 0; s < g.samples; ++s) {
        const MultiPoly f = random_reduced_poly(field, n, 4, rng, false);
        const VarietyFootprint vf = variety_footprint(PolyBasis({f}), {}, config.budget);
        rec.add("footprint = points [" + f.to_string() + "]", q, n, std::nullopt,
                std::to_string(vf.footprint.delta_size), std::to_string(vf.points),
                vf.footprint.delta_size == vf.points);
      }
    }
  }
}

void sampling_suite(const SweepConfig& config, SuiteResult& out) {
  const Grid g = resolve("sampling", config);
  Recorder rec(out);
  Rng rng(config.seed);
  for (int q : g.qs) {
    const FieldPtr field = make_field_ptr(q);
    for (int n : g.ns) {
      for (int d : degrees(config, 1, n * (q - 1) - 1)) {
        std::optional<SecondWeightResult> w2;
        try {
          w2 = second_weight(q, n, d);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kRegimeNotCovered) throw;
          continue;
        }
        const GrmParams p = grm_params(q, n, d);
        std::uint64_t gap_hits = 0;
        std::string first_hit;
        for (std::size_t s = 0; s < g.samples; ++s) {
          const MultiPoly f = random_reduced_poly(field, n, d, rng, true);
          const auto w = static_cast<std::int64_t>(count_points(f, config.budget).weight);
          if (w != 0 && w != p.w1 && w < w2->lo) {
            if (gap_hits++ == 0) first_hit = f.to_string() + " has weight " + std::to_string(w);
          }
        }
        rec.add("weights outside (w1, w2)", q, n, d,
                std::to_string(gap_hits) + " of " + std::to_string(g.samples) +
                    (gap_hits ? ", e.g. " + first_hit : ""),
                "0", gap_hits == 0);
        if (!w2->exact || !main_range(q, n, d)) continue;
        const BestNonMaximal best = best_nonmaximal_type(q, n, d);
        const MultiPoly f = arrangement_poly(realize(best.type));
        rec.check("arrangement " + best.type.to_string() + " weight", q, n, d,
                  static_cast<std::int64_t>(count_points(f, config.budget).weight),
                  w2->value());
        rec.check("arrangement degree", q, n, d, reduce_poly(f).degree().value_or(-1), d);
      }
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

MultiPoly random_reduced_poly(const FieldPtr& field, int nvars, int max_degree, Rng& rng,
                              bool exact_degree) {
  const int q = field->q();
  std::vector<Term> terms;
  std::vector<Monomial> top;
  bool has_top = false;
  Monomial m(nvars);
  const std::uint64_t size = checked_grid_size(q, nvars, kDefaultBudget);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (m.degree() <= max_degree) {
      const auto c = static_cast<std::uint32_t>(rng() % q);
      if (m.degree() == max_degree) {
        top.push_back(m);
        has_top |= c != 0;
      }
      if (c != 0) terms.push_back({field->element(c), m});
    }
    for (int i = nvars - 1; i >= 0; --i) {
      if (++m[i] < q) break;
      m[i] = 0;
    }
  }
  if (exact_degree && !has_top && !top.empty()) {
    const Monomial& pick = top[rng() % top.size()];
    const auto c = static_cast<std::uint32_t>(1 + rng() % (q - 1));
    terms.push_back({field->element(c), pick});
  }
  MultiPoly f(field, nvars, std::move(terms));
  if (f.is_zero()) return MultiPoly::constant(field, nvars, field->one());
  return f;
}

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {"lemma",     "arrangements", "dimension",
                                                      "footprint", "sampling",     "all"};
  return names;
}

SuiteResult run_suite(std::string_view suite, const SweepConfig& config) {
  SuiteResult out{std::string(suite), {}};
  if (suite == "lemma") {
    lemma_suite(config, out);
  } else if (suite == "arrangements") {
    arrangement_suite(config, out);
  } else if (suite == "dimension") {
    dimension_suite(config, out);
  } else if (suite == "footprint") {
    footprint_suite(config, out);
  } else if (suite == "sampling") {
    sampling_suite(config, out);
  } else if (suite == "all") {
    for (std::string_view s : suite_names()) {
      if (s == "all") continue;
      SuiteResult part = run_suite(s, config);
      for (auto& r : part.records) out.records.push_back(std::move(r));
    }
  } else {
    throw Error(ErrorCode::kParameterOutOfRange, "unknown suite '" + std::string(suite) + "'");
  }
  return out;
}

std::string to_json(const SuiteResult& result, std::optional<std::int64_t> elapsed_ms) {
  json records = json::array();
  for (const CheckRecord& r : result.records) {
    records.push_back({{"suite", r.suite},
                       {"task", r.task},
                       {"q", r.q},
                       {"n", r.n},
                       {"d", r.d ? json(*r.d) : json(nullptr)},
                       {"computed", r.computed},
                       {"oracle", r.oracle},
                       {"pass", r.pass}});
  }
  json doc = {{"suite", result.suite},
              {"checks", result.records.size()},
              {"failures", result.failures()},
              {"passed", result.passed()},
              {"records", records}};
  if (elapsed_ms) doc["elapsed_ms"] = *elapsed_ms;
  return doc.dump(2) + "\n";
}

std::string to_csv(const SuiteResult& result) {
  std::ostringstream out;
  out << "suite,task,q,n,d,computed,oracle,pass\n";
  for (const CheckRecord& r : result.records) {
    out << r.suite << ',' << csv_field(r.task) << ',' << r.q << ',' << r.n << ','
        << (r.d ? std::to_string(*r.d) : "") << ',' << csv_field(r.computed) << ','
        << csv_field(r.oracle) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace grm
