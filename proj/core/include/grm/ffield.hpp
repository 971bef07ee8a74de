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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grm {

// An element of GF(q) identified by its index in 0..q-1. For prime q the
// index is the residue; for q = p^e it is the coefficient vector in the basis
// 1, t, t^2, ... read as a base-p number (low coefficient = low digit).
struct Element {
  std::uint32_t index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

enum class FieldOp { kAdd, kSub, kMul, kInv, kNeg };

// GF(q) for the supported cardinalities {2,3,4,5,7,8,9,11,13,16,25,27}.
// Extension fields use the fixed moduli
//   GF(4): x^2+x+1   GF(8): x^3+x+1    GF(9): x^2+x+2
//   GF(16): x^4+x+1  GF(25): x^2+x+2   GF(27): x^3+2x+1
// and multiply through log/antilog tables. Immutable after construction.
class Field {
 public:
  static std::vector<int> supported_cardinalities();

  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }
  // Low-to-high coefficients of the monic modulus; empty for prime fields.
  std::span<const int> modulus() const { return modulus_; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  Element element(std::uint32_t index) const;
  std::vector<Element> elements() const;
  // Primitive element; the class of t for every built-in modulus.
  Element generator() const {
    return Element{static_cast<std::uint32_t>(antilog_[1 % antilog_.size()])};
  }

  Element add(Element a, Element b) const { return Element{add_[a.index * q_ + b.index]}; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const { return Element{neg_[a.index]}; }
  Element mul(Element a, Element b) const { return Element{mul_[a.index * q_ + b.index]}; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t k) const;

  // Maps an integer onto the prime subfield (k mod p).
  Element from_int(std::int64_t k) const;

  // Raw table access for the grid evaluators.
  std::span<const std::uint8_t> add_table() const { return add_; }
  std::span<const std::uint8_t> mul_table() const { return mul_; }

  bool operator==(const Field& other) const { return q_ == other.q_; }

 private:
  friend Field make_field(int q);
  Field() = default;

  int q_ = 0;
  int p_ = 0;
  int e_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
  std::vector<int> log_;      // log_[0] unused
  std::vector<int> antilog_;  // antilog_[k] = index of g^k, k in [0, q-1)
};

using FieldPtr = std::shared_ptr<const Field>;

// Throws kUnsupportedCardinality for q outside the supported set.
Field make_field(int q);
FieldPtr make_field_ptr(int q);

// Dispatches one arithmetic operation; `b` is required for kAdd/kSub/kMul.
Element field_arith(const Field& field, FieldOp op, Element a,
                    std::optional<Element> b = std::nullopt);

}  // namespace grm
