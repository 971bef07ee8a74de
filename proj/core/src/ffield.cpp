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

#include "grm/ffield.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "grm/errors.hpp"

namespace grm {

namespace {

struct FieldEntry {
  int p;
  int e;
  std::vector<int> modulus;  // low-to-high, monic, length e+1
};

const std::map<int, FieldEntry>& field_table() {
  static const std::map<int, FieldEntry> table = {
      {2, {2, 1, {}}},
      {3, {3, 1, {}}},
      {4, {2, 2, {1, 1, 1}}},
      {5, {5, 1, {}}},
      {7, {7, 1, {}}},
      {8, {2, 3, {1, 1, 0, 1}}},
      {9, {3, 2, {2, 1, 1}}},
      {11, {11, 1, {}}},
      {13, {13, 1, {}}},
      {16, {2, 4, {1, 1, 0, 0, 1}}},
      {25, {5, 2, {2, 1, 1}}},
      {27, {3, 3, {1, 2, 0, 1}}},
  };
  return table;
}

std::vector<int> digits(int index, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int index = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) index = index * p + d[i];
  return index;
}

// Schoolbook product of two residues modulo the monic modulus.
int poly_mulmod(int a, int b, int p, int e, const std::vector<int>& modulus) {
  const auto da = digits(a, p, e);
  const auto db = digits(b, p, e);
  std::vector<int> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int deg = 2 * e - 2; deg >= e; --deg) {
    const int c = prod[deg];
    if (c == 0) continue;
    // x^e = -(m_0 + ... + m_{e-1} x^{e-1})
    for (int k = 0; k <= e; ++k)
      prod[deg - e + k] = ((prod[deg - e + k] - c * modulus[k]) % p + p) % p;
  }
  prod.resize(e);
  return undigits(prod, p);
}

}  // namespace

std::vector<int> Field::supported_cardinalities() {
  std::vector<int> out;
  for (const auto& [q, entry] : field_table()) out.push_back(q);
  return out;
}

Field make_field(int q) {
  const auto& table = field_table();
  const auto it = table.find(q);
  if (it == table.end()) {
    throw Error(ErrorCode::kUnsupportedCardinality,
                "GF(" + std::to_string(q) + ") is not a supported field");
  }
  const FieldEntry& entry = it->second;

  Field f;
  f.q_ = q;
  f.p_ = entry.p;
  f.e_ = entry.e;
  f.modulus_ = entry.modulus;
  const int p = entry.p;
  const int e = entry.e;

  f.add_.resize(q * q);
  f.neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p, e);
    std::vector<int> dn(e);
    for (int i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    f.neg_[a] = static_cast<std::uint8_t>(undigits(dn, p));
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p, e);
      std::vector<int> ds(e);
      for (int i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
      f.add_[a * q + b] = static_cast<std::uint8_t>(undigits(ds, p));
    }
  }

  auto raw_mul = [&](int a, int b) {
    if (e == 1) return (a * b) % p;
    return poly_mulmod(a, b, p, e, entry.modulus);
  };

  // Smallest-index primitive element, trying t (index p) first for extensions.
  std::vector<int> candidates;
  if (e > 1) candidates.push_back(p);
  for (int g = 2; g < q; ++g) candidates.push_back(g);
  if (q == 2) candidates.push_back(1);
  int generator = -1;
  for (int g : candidates) {
    int x = 1;
    int order = 0;
    do {
      x = raw_mul(x, g);
      ++order;
    } while (x != 1 && x != 0 && order < q);
    if (x == 1 && order == q - 1) {
      generator = g;
      break;
    }
  }
  if (generator < 0) {
    throw Error(ErrorCode::kUnsupportedCardinality,
                "no primitive element found for GF(" + std::to_string(q) + ")");
  }

  f.antilog_.resize(q - 1);
  f.log_.assign(q, -1);
  int x = 1;
  for (int k = 0; k < q - 1; ++k) {
    f.antilog_[k] = x;
    f.log_[x] = k;
    x = raw_mul(x, generator);
  }

  f.mul_.assign(q * q, 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      f.mul_[a * q + b] =
          static_cast<std::uint8_t>(f.antilog_[(f.log_[a] + f.log_[b]) % (q - 1)]);

  f.inv_.assign(q, 0);
  for (int a = 1; a < q; ++a)
    f.inv_[a] = static_cast<std::uint8_t>(f.antilog_[(q - 1 - f.log_[a]) % (q - 1)]);
  return f;
}

FieldPtr make_field_ptr(int q) { return std::make_shared<const Field>(make_field(q)); }

Element Field::element(std::uint32_t index) const {
  if (index >= static_cast<std::uint32_t>(q_)) {
    throw Error(ErrorCode::kCoefficientOutOfRange,
                std::to_string(index) + " is not an element index of GF(" +
                    std::to_string(q_) + ")");
  }
  return Element{index};
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out(q_);
  for (int i = 0; i < q_; ++i) out[i] = Element{static_cast<std::uint32_t>(i)};
  return out;
}

Element Field::inv(Element a) const {
  if (a.index == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of 0");
  return Element{inv_[a.index]};
}

Element Field::pow(Element a, std::uint64_t k) const {
  if (k == 0) return one();
  if (a.index == 0) return zero();
  const std::uint64_t l = static_cast<std::uint64_t>(log_[a.index]) * (k % (q_ - 1));
  return Element{static_cast<std::uint32_t>(antilog_[l % (q_ - 1)])};
}

Element Field::from_int(std::int64_t k) const {
  const std::int64_t r = ((k % p_) + p_) % p_;
  return Element{static_cast<std::uint32_t>(r)};
}

Element field_arith(const Field& field, FieldOp op, Element a, std::optional<Element> b) {
  auto need_b = [&]() {
    if (!b) throw Error(ErrorCode::kSyntaxError, "binary field operation needs two operands");
    return *b;
  };
  switch (op) {
    case FieldOp::kAdd: return field.add(a, need_b());
    case FieldOp::kSub: return field.sub(a, need_b());
    case FieldOp::kMul: return field.mul(a, need_b());
    case FieldOp::kInv: return field.inv(a);
    case FieldOp::kNeg: return field.neg(a);
  }
  return a;
}

}  // namespace grm
