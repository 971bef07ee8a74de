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

#include "grm/lemma.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace grm {

LemmaInstance make_lemma_instance(int q, int n, int d) {
  if (q < 3 || n < 3 || d < q || d > (n - 1) * (q - 1)) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "needs q >= 3, n >= 3 and q <= d <= (n-1)(q-1); got (" + std::to_string(q) +
                    ", " + std::to_string(n) + ", " + std::to_string(d) + ")");
  }
  LemmaInstance inst{q, n, d, d / (q - 1), d % (q - 1), 0};
  inst.budget = inst.b == 0 ? d + 1 : d + q - inst.b;
  return inst;
}

std::string describe(VConstraint c) {
  switch (c) {
    case VConstraint::kLength: return "length differs from n";
    case VConstraint::kRange: return "entry outside [0, q-1]";
    case VConstraint::kBudget: return "sum exceeds K";
    case VConstraint::kHead: return "alpha_1..alpha_a = q-1 with alpha_{a+1} >= b";
  }
  return "?";
}

std::string format_alpha(const AlphaSequence& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(alpha[i]);
  }
  return out + ")";
}

std::optional<VConstraint> v_violation(const AlphaSequence& alpha, const LemmaInstance& inst) {
  if (static_cast<int>(alpha.size()) != inst.n) return VConstraint::kLength;
  int sum = 0;
  for (int x : alpha) {
    if (x < 0 || x > inst.q - 1) return VConstraint::kRange;
    sum += x;
  }
  if (sum > inst.budget) return VConstraint::kBudget;
  const bool head_full =
      std::all_of(alpha.begin(), alpha.begin() + inst.a, [&](int x) { return x == inst.q - 1; });
  if (head_full && alpha[inst.a] >= inst.b) return VConstraint::kHead;
  return std::nullopt;
}

namespace {

std::int64_t raw_objective(const AlphaSequence& alpha, const LemmaInstance& inst) {
  const int q = inst.q;
  std::int64_t p1 = 1;
  for (int x : alpha) p1 *= q - x;
  std::int64_t p2 = q - std::max(alpha[inst.a], inst.b);
  for (int i = inst.a + 1; i < inst.n; ++i) p2 *= q - alpha[i];
  return p1 - p2;
}

// Calls fn on every alpha in V, in lexicographic order.
void for_each_in_v(const LemmaInstance& inst, const std::function<void(const AlphaSequence&)>& fn,
                   std::uint64_t budget = kDefaultBudget) {
  const std::uint64_t size = checked_grid_size(inst.q, inst.n, budget);
  AlphaSequence alpha(inst.n, 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (in_v(alpha, inst)) fn(alpha);
    for (int i = inst.n - 1; i >= 0; --i) {
      if (++alpha[i] < inst.q) break;
      alpha[i] = 0;
    }
  }
}

void record(PropertyReport& r, bool holds, const std::string& what) {
  ++r.checked;
  if (holds) return;
  if (r.violations++ == 0) r.counterexample = what;
}

}  // namespace

std::int64_t objective(const AlphaSequence& alpha, const LemmaInstance& inst) {
  if (auto v = v_violation(alpha, inst)) {
    throw Error(ErrorCode::kNotInV, format_alpha(alpha) + ": " + describe(*v));
  }
  return raw_objective(alpha, inst);
}

BruteForceMin brute_force_min(const LemmaInstance& inst, std::uint64_t budget) {
  BruteForceMin out;
  bool first = true;
  for_each_in_v(
      inst,
      [&](const AlphaSequence& alpha) {
        ++out.v_size;
        const std::int64_t v = raw_objective(alpha, inst);
        if (first || v < out.mu) {
          first = false;
          out.mu = v;
          out.minimizers.clear();
          out.truncated = false;
        }
        if (v == out.mu) {
          if (out.minimizers.size() < kMinimizerCap) {
            out.minimizers.push_back(alpha);
          } else {
            out.truncated = true;
          }
        }
      },
      budget);
  return out;
}

std::int64_t closed_form_mu(const LemmaInstance& inst) {
  const int q = inst.q;
  const int n = inst.n;
  const int a = inst.a;
  const int b = inst.b;
  if (b == 0) return (q - 2) * ipow(q, n - a - 1);
  if (b == 1 && a < n - 2) return (q - 1) * ipow(q, n - a - 3);
  if (b == 1) return (q - 2) * ipow(q, n - a - 2);
  return (b - 1) * ipow(q, n - a - 2);
}

AlphaSequence canonicalize(const AlphaSequence& alpha, const LemmaInstance& inst) {
  AlphaSequence out = alpha;
  const auto split = out.begin() + inst.a;
  std::sort(out.begin(), split, std::greater<>());
  if (out[inst.a] < inst.b) {
    std::sort(split + 1, out.end(), std::greater<>());
  } else {
    std::sort(split, out.end(), std::greater<>());
  }
  return out;
}

std::vector<CanonicalShape> canonical_shapes(const LemmaInstance& inst) {
  const int q = inst.q;
  const int n = inst.n;
  const int a = inst.a;
  const int b = inst.b;
  std::vector<CanonicalShape> out;
  auto head = [&](bool deficit) {
    AlphaSequence alpha(n, 0);
    std::fill(alpha.begin(), alpha.begin() + a, q - 1);
    if (deficit) alpha[a - 1] = q - 2;
    return alpha;
  };
  if (b == 0 && a + 1 <= n) {
    auto alpha = head(true);
    alpha[a] = 2;
    out.push_back({"b=0", alpha});
  }
  if (b == 1 || b >= 2) {
    if (a + 3 <= n) {
      auto alpha = head(false);
      alpha[a + 1] = q - 1;
      alpha[a + 2] = 1;
      out.push_back({"b>=1, alpha_{a+1}=0", alpha});
    }
    if (a + 2 <= n) {
      auto alpha = head(true);
      alpha[a] = q - 1;
      alpha[a + 1] = 2;
      out.push_back({"b>=1, alpha_{a+1}>=b", alpha});
    }
  }
  if (b >= 2 && a + 2 <= n) {
    auto alpha = head(false);
    alpha[a] = 1;
    alpha[a + 1] = q - 1;
    out.push_back({"2<=b, alpha_{a+1}=1", alpha});
  }
  return out;
}

MinimizerStructure check_minimizer_structure(const LemmaInstance& inst, std::uint64_t budget) {
  const BruteForceMin bf = brute_force_min(inst, budget);
  std::set<AlphaSequence> canonical;
  for (const auto& m : bf.minimizers) canonical.insert(canonicalize(m, inst));
  for (const auto& shape : canonical_shapes(inst)) {
    if (!in_v(shape.alpha, inst) || raw_objective(shape.alpha, inst) != bf.mu) continue;
    if (!bf.truncated && !canonical.contains(shape.alpha)) continue;
    return {shape.name, shape.alpha, bf.mu};
  }
  std::string seen;
  for (const auto& m : canonical) {
    if (!seen.empty()) seen += ' ';
    seen += format_alpha(m);
    if (seen.size() > 200) break;
  }
  throw Error(ErrorCode::kStructureMismatch,
              "(q, n, d) = (" + std::to_string(inst.q) + ", " + std::to_string(inst.n) + ", " +
                  std::to_string(inst.d) + "): mu = " + std::to_string(bf.mu) +
                  " attained only by non-canonical " + seen);
}

PropertyReport check_permutation_invariance(const LemmaInstance& inst) {
  PropertyReport r{"permutation invariance", 0, 0, {}};
  const int a = inst.a;
  for_each_in_v(inst, [&](const AlphaSequence& alpha) {
    const std::int64_t base = raw_objective(alpha, inst);
    AlphaSequence head(alpha.begin(), alpha.begin() + a);
    std::sort(head.begin(), head.end());
    do {
      AlphaSequence p = alpha;
      std::copy(head.begin(), head.end(), p.begin());
      record(r, raw_objective(p, inst) == base, "head of " + format_alpha(alpha));
    } while (std::next_permutation(head.begin(), head.end()));

    if (alpha[a] < inst.b) {
      AlphaSequence tail(alpha.begin() + a + 1, alpha.end());
      std::sort(tail.begin(), tail.end());
      do {
        AlphaSequence p = alpha;
        std::copy(tail.begin(), tail.end(), p.begin() + a + 1);
        record(r, raw_objective(p, inst) == base, "tail of " + format_alpha(alpha));
      } while (std::next_permutation(tail.begin(), tail.end()));
    } else {
      for (int i = a + 1; i < inst.n; ++i) {
        if (alpha[i] < inst.b) continue;
        AlphaSequence p = alpha;
        std::swap(p[a], p[i]);
        record(r, raw_objective(p, inst) == base, "split swap of " + format_alpha(alpha));
      }
    }
  });
  return r;
}

PropertyReport check_increment_monotonicity(const LemmaInstance& inst) {
  PropertyReport r{"increment monotonicity", 0, 0, {}};
  for_each_in_v(inst, [&](const AlphaSequence& alpha) {
    const std::int64_t base = raw_objective(alpha, inst);
    for (int i = 0; i < inst.n; ++i) {
      AlphaSequence p = alpha;
      ++p[i];
      if (!in_v(p, inst)) continue;
      record(r, raw_objective(p, inst) < base,
             format_alpha(alpha) + " -> " + format_alpha(p));
    }
  });
  return r;
}

PropertyReport check_budget_attained(const LemmaInstance& inst) {
  PropertyReport r{"minimum attained at sum = K", 0, 0, {}};
  const BruteForceMin bf = brute_force_min(inst);
  bool attained = false;
  for (const auto& m : bf.minimizers) {
    int sum = 0;
    for (int x : m) sum += x;
    attained |= sum == inst.budget;
  }
  record(r, attained, "no minimizer with sum " + std::to_string(inst.budget));
  return r;
}

PropertyReport check_split_swap(const LemmaInstance& inst) {
  PropertyReport r{"split swap", 0, 0, {}};
  for_each_in_v(inst, [&](const AlphaSequence& alpha) {
    const std::int64_t base = raw_objective(alpha, inst);
    for (int i = 0; i < inst.a; ++i) {
      for (int j = inst.a; j < inst.n; ++j) {
        if (alpha[j] <= alpha[i]) continue;
        AlphaSequence p = alpha;
        std::swap(p[i], p[j]);
        if (!in_v(p, inst)) continue;
        record(r, raw_objective(p, inst) <= base,
               format_alpha(alpha) + " -> " + format_alpha(p));
      }
    }
  });
  return r;
}

PropertyReport check_balancing_move(const LemmaInstance& inst) {
  PropertyReport r{"balancing move", 0, 0, {}};
  const int a = inst.a;
  const int n = inst.n;
  for_each_in_v(inst, [&](const AlphaSequence& alpha) {
    const std::int64_t base = raw_objective(alpha, inst);
    // 1-based indices i, j as in the case list.
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const int ai = alpha[i - 1];
        const int aj = alpha[j - 1];
        if (!(1 <= ai && ai <= aj && aj <= inst.q - 2)) continue;
        const bool case1 = 1 <= j && j < i && i <= a;
        const bool case2 = a + 2 <= j && j < i && i <= n;
        const bool case3 = alpha[a] >= inst.b && a + 1 <= j && j < i && i <= n;
        const bool case4 = 1 <= j && j <= a && a + 2 <= i && i <= n;
        if (!(case1 || case2 || case3 || case4)) continue;
        AlphaSequence p = alpha;
        --p[i - 1];
        ++p[j - 1];
        if (!in_v(p, inst)) continue;
        record(r, raw_objective(p, inst) < base,
               format_alpha(alpha) + " -> " + format_alpha(p));
      }
    }
  });
  return r;
}

std::vector<PropertyReport> check_structural_lemmas(const LemmaInstance& inst) {
  return {check_permutation_invariance(inst), check_increment_monotonicity(inst),
          check_budget_attained(inst), check_split_swap(inst), check_balancing_move(inst)};
}

}  // namespace grm
