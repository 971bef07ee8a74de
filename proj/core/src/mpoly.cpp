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

#include "grm/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

namespace grm {

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(int nvars, int var, int power) {
  Monomial m(nvars);
  m.exps_[var] = power;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_reduced(int q) const {
  return std::all_of(exps_.begin(), exps_.end(), [q](int e) { return e <= q - 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'X' + std::to_string(i + 1);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i < a.nvars(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::kLengthMismatch,
                "monomials in " + std::to_string(a.nvars()) + " and " +
                    std::to_string(b.nvars()) + " variables");
  }
  return grlex_compare(a, b) < 0;
}

// ---- MultiPoly --------------------------------------------------------------

namespace {

bool term_desc(const Term& x, const Term& y) { return grlex_compare(x.mono, y.mono) > 0; }

}  // namespace

MultiPoly::MultiPoly(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {}

MultiPoly::MultiPoly(FieldPtr field, int nvars, std::vector<Term> terms)
    : field_(std::move(field)), nvars_(nvars) {
  std::sort(terms.begin(), terms.end(), term_desc);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = field_->add(terms_.back().coef, t.coef);
      if (terms_.back().coef.index == 0) terms_.pop_back();
      continue;
    }
    if (t.coef.index != 0) terms_.push_back(std::move(t));
  }
}

MultiPoly MultiPoly::constant(FieldPtr field, int nvars, Element c) {
  return monomial(std::move(field), nvars, c, Monomial(nvars));
}

MultiPoly MultiPoly::variable(FieldPtr field, int nvars, int var) {
  const Element one = field->one();
  return monomial(std::move(field), nvars, one, Monomial::variable(nvars, var));
}

MultiPoly MultiPoly::monomial(FieldPtr field, int nvars, Element c, Monomial m) {
  std::vector<Term> terms;
  terms.push_back({c, std::move(m)});
  return MultiPoly(std::move(field), nvars, std::move(terms));
}

std::optional<int> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().mono.degree();
}

bool MultiPoly::is_reduced() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.is_reduced(field_->q()); });
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::kZeroPolynomial, "leading term of 0");
  return terms_.front();
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (nvars_ != other.nvars_ || !(*field_ == *other.field_)) {
    throw Error(ErrorCode::kLengthMismatch, "polynomials live in different rings");
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  check_compatible(other);
  MultiPoly r(field_, nvars_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() ||
        (i != terms_.end() && grlex_compare(i->mono, j->mono) > 0)) {
      r.terms_.push_back(*i++);
    } else if (i == terms_.end() || grlex_compare(i->mono, j->mono) < 0) {
      r.terms_.push_back(*j++);
    } else {
      const Element c = field_->add(i->coef, j->coef);
      if (c.index != 0) r.terms_.push_back({c, i->mono});
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const { return scale(field_->neg(field_->one())); }

MultiPoly MultiPoly::operator-(const MultiPoly& other) const { return *this + (-other); }

MultiPoly MultiPoly::scale(Element c) const {
  MultiPoly r(field_, nvars_);
  if (c.index == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field_->mul(t.coef, c), t.mono});
  return r;
}

MultiPoly MultiPoly::mul_term(Element c, const Monomial& m) const {
  // Multiplying by a monomial preserves grlex order.
  MultiPoly r(field_, nvars_);
  if (c.index == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field_->mul(t.coef, c), t.mono * m});
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  check_compatible(other);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) prod.push_back({field_->mul(a.coef, b.coef), a.mono * b.mono});
  return MultiPoly(field_, nvars_, std::move(prod));
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scale(field_->inv(terms_.front().coef));
}

Element MultiPoly::evaluate(std::span<const Element> point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw Error(ErrorCode::kLengthMismatch, "point has " + std::to_string(point.size()) +
                                                " coordinates, expected " +
                                                std::to_string(nvars_));
  }
  Element sum = field_->zero();
  for (const auto& t : terms_) {
    Element v = t.coef;
    for (int i = 0; i < nvars_; ++i)
      if (t.mono[i] > 0) v = field_->mul(v, field_->pow(point[i], t.mono[i]));
    sum = field_->add(sum, v);
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coef.index);
    } else {
      if (t.coef.index != 1) out += std::to_string(t.coef.index) + "*";
      out += t.mono.to_string();
    }
  }
  return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return nvars_ == other.nvars_ && *field_ == *other.field_ && terms_ == other.terms_;
}

// ---- parsing ----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars, FieldPtr field)
      : text_(text), nvars_(nvars), field_(std::move(field)) {}

  MultiPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    while (true) {
      Term t = parse_term();
      if (negate) t.coef = field_->neg(t.coef);
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() == '+') {
        negate = false;
      } else if (peek() == '-') {
        negate = true;
      } else {
        fail(std::string("unexpected '") + peek() + "'");
      }
      ++pos_;
    }
    return MultiPoly(field_, nvars_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kSyntaxError, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  long long parse_uint() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000) fail("number too large");
      ++pos_;
    }
    return v;
  }

  Term parse_term() {
    skip_ws();
    Term t{field_->one(), Monomial(nvars_)};
    if (at_end()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      const long long c = parse_uint();
      if (c >= field_->q()) {
        throw Error(ErrorCode::kCoefficientOutOfRange,
                    "column " + std::to_string(start + 1) + ": coefficient " +
                        std::to_string(c) + " is not an element index of GF(" +
                        std::to_string(field_->q()) + ")");
      }
      t.coef = Element{static_cast<std::uint32_t>(c)};
      skip_ws();
      if (at_end() || peek() != '*') return t;
      ++pos_;
      parse_factor(t.mono);
    } else {
      parse_factor(t.mono);
    }
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      parse_factor(t.mono);
    }
    return t;
  }

  void parse_factor(Monomial& mono) {
    skip_ws();
    if (at_end() || (peek() != 'X' && peek() != 'x')) fail("expected a variable X<i>");
    ++pos_;
    const std::size_t start = pos_;
    const long long var = parse_uint();
    if (var < 1 || var > nvars_) {
      throw Error(ErrorCode::kVariableOutOfRange,
                  "column " + std::to_string(start + 1) + ": X" + std::to_string(var) +
                      " outside X1..X" + std::to_string(nvars_));
    }
    long long exp = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      exp = parse_uint();
    }
    mono[static_cast<int>(var - 1)] += static_cast<int>(exp);
  }

  std::string_view text_;
  int nvars_;
  FieldPtr field_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, int nvars, FieldPtr field) {
  return Parser(text, nvars, std::move(field)).parse();
}

// ---- reduction, evaluation, counting ------------------------------------------

MultiPoly reduce_poly(const MultiPoly& f) {
  const int q = f.field().q();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    for (int i = 0; i < m.nvars(); ++i)
      if (m[i] >= q) m[i] = (m[i] - 1) % (q - 1) + 1;
    terms.push_back({t.coef, std::move(m)});
  }
  return MultiPoly(f.field_ptr(), f.nvars(), std::move(terms));
}

Element evaluate(const MultiPoly& f, std::span<const Element> point) { return f.evaluate(point); }

std::vector<std::uint8_t> evaluate_grid(const MultiPoly& f, std::uint64_t budget) {
  const Field& field = f.field();
  const int q = field.q();
  const int n = f.nvars();
  const std::uint64_t size = checked_grid_size(q, n, budget);

  std::vector<std::uint8_t> tensor(size, 0);
  const MultiPoly reduced = reduce_poly(f);
  for (const auto& t : reduced.terms()) {
    std::uint64_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * q + t.mono[i];
    tensor[idx] = static_cast<std::uint8_t>(t.coef.index);
  }

  // pw[x * q + e] = x^e
  std::vector<std::uint8_t> pw(q * q);
  for (int x = 0; x < q; ++x)
    for (int e = 0; e < q; ++e)
      pw[x * q + e] = static_cast<std::uint8_t>(field.pow(Element{static_cast<std::uint32_t>(x)}, e).index);
  const auto add = field.add_table();
  const auto mul = field.mul_table();

  std::vector<std::uint8_t> in(q), out(q);
  std::uint64_t stride = size;
  for (int axis = 0; axis < n; ++axis) {
    stride /= q;
    const std::uint64_t block = stride * q;
    for (std::uint64_t hi = 0; hi < size; hi += block) {
      for (std::uint64_t lo = 0; lo < stride; ++lo) {
        const std::uint64_t base = hi + lo;
        bool nonzero = false;
        for (int e = 0; e < q; ++e) {
          in[e] = tensor[base + e * stride];
          nonzero |= in[e] != 0;
        }
        if (!nonzero) continue;
        for (int x = 0; x < q; ++x) {
          std::uint8_t acc = 0;
          for (int e = 0; e < q; ++e)
            if (in[e]) acc = add[acc * q + mul[in[e] * q + pw[x * q + e]]];
          out[x] = acc;
        }
        for (int x = 0; x < q; ++x) tensor[base + x * stride] = out[x];
      }
    }
  }
  return tensor;
}

HypersurfaceCount count_points(const MultiPoly& f, std::uint64_t budget) {
  const auto values = evaluate_grid(f, budget);
  HypersurfaceCount r;
  r.q = f.field().q();
  r.n = f.nvars();
  r.zeros = static_cast<std::uint64_t>(std::count(values.begin(), values.end(), 0));
  r.weight = values.size() - r.zeros;
  return r;
}

Term leading_monomial(const MultiPoly& f) { return f.leading_term(); }

std::vector<Element> grid_point(std::uint64_t index, int q, int n) {
  std::vector<Element> pt(n);
  for (int i = n - 1; i >= 0; --i) {
    pt[i] = Element{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return pt;
}

}  // namespace grm
