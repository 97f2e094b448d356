// Copyright 2026 The dioph Authors
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

#include "exact/real_number.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace dioph {

namespace {

// n = k^2 * s with s squarefree.
std::pair<Integer, Integer> squarefree_split(Integer n) {
  Integer k = 1;
  Integer s = 1;
  for (unsigned long p = 2; p < 1'000'000 && Integer(p) * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) k *= p;
    if (e % 2 == 1) s *= p;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    k *= r;
  } else {
    s *= n;
  }
  return {k, s};
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RealNumber parse() {
    RealNumber v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse real literal '" + std::string(s_) +
                          "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RealNumber expr() {
    RealNumber v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  RealNumber term() {
    RealNumber v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        RealNumber d = factor();
        if (!d.is_rational()) fail("division by an irrational");
        if (d.rational_part() == 0) fail("division by zero");
        v = v.scaled(1 / d.rational_part());
      } else {
        return v;
      }
    }
  }
  RealNumber factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    if (eat('(')) {
      RealNumber v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      std::string_view word = s_.substr(start, pos_ - start);
      if (word == "phi") return RealNumber::golden_ratio();
      if (word == "sqrt") {
        if (!eat('(')) fail("expected '(' after sqrt");
        RealNumber arg = expr();
        if (!eat(')')) fail("missing ')'");
        if (!arg.is_rational()) fail("sqrt of an irrational");
        return RealNumber::sqrt(arg.rational_part());
      }
      fail("unknown name '" + std::string(word) + "'");
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
      ++pos_;
    if (start == pos_) fail("expected a number");
    return RealNumber(parse_rational(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RealNumber RealNumber::sqrt(const Rational& x) {
  if (x < 0) throw ValidationError("square root of a negative number");
  // sqrt(p/q) = sqrt(p*q)/q
  Integer n = x.get_num() * x.get_den();
  auto [k, s] = squarefree_split(n);
  RealNumber r;
  Rational coef = make_rational(k, x.get_den());
  if (s == 1)
    r.rat_ = coef;
  else if (coef != 0)
    r.surds_.emplace_back(s, coef);
  return r;
}

RealNumber RealNumber::quadratic(const Rational& p, const Rational& q,
                                 const Integer& d, const Rational& r) {
  if (d < 0) throw ValidationError("negative discriminant");
  if (r == 0) throw ValidationError("zero denominator in quadratic constant");
  return (RealNumber(p) + sqrt(Rational(d)).scaled(q)).scaled(1 / r);
}

RealNumber RealNumber::golden_ratio() {
  return quadratic(1, 1, 5, 2);
}

const Rational& RealNumber::as_rational() const {
  if (!is_rational()) throw ValidationError("value " + to_string() + " is irrational");
  return rat_;
}

void RealNumber::add_surd(const Integer& d, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(
      surds_.begin(), surds_.end(), d,
      [](const std::pair<Integer, Rational>& e, const Integer& key) { return e.first < key; });
  if (it != surds_.end() && it->first == d) {
    it->second += c;
    if (it->second == 0) surds_.erase(it);
  } else {
    surds_.insert(it, {d, c});
  }
}

RealInterval RealNumber::enclose(unsigned bits) const {
  RealInterval acc(rat_, bits);
  for (const auto& [d, c] : surds_) {
    acc = acc + RealInterval::sqrt_of(d, bits + 8).scaled(c);
  }
  return acc;
}

int RealNumber::sign(const Limits& limits) const {
  if (surds_.empty()) return sgn(rat_);
  for (unsigned bits = limits.initial_bits; bits <= limits.precision_cap_bits;
       bits *= 2) {
    auto s = enclose(bits).sign();
    if (s && *s != 0) return *s;
  }
  throw PrecisionError("sign of " + to_string() + " undecided at " +
                       std::to_string(limits.precision_cap_bits) + " bits");
}

Integer RealNumber::floor(const Limits& limits) const {
  if (surds_.empty()) return floor_of(rat_);
  for (unsigned bits = limits.initial_bits; bits <= limits.precision_cap_bits;
       bits *= 2) {
    RealInterval iv = enclose(bits);
    Integer lo = floor_of(iv.lo());
    // An irrational value never equals an integer, so hi == lo's successor
    // can only mean the enclosure is still too wide.
    if (lo == floor_of(iv.hi()) && Rational(lo) != iv.hi()) return lo;
  }
  throw PrecisionError("floor of " + to_string() + " undecided");
}

RealNumber RealNumber::abs(const Limits& limits) const {
  return sign(limits) < 0 ? -*this : *this;
}

RealNumber RealNumber::operator-() const {
  RealNumber r = *this;
  r.rat_ = -r.rat_;
  for (auto& e : r.surds_) e.second = -e.second;
  return r;
}

RealNumber& RealNumber::operator+=(const RealNumber& o) {
  rat_ += o.rat_;
  for (const auto& [d, c] : o.surds_) add_surd(d, c);
  return *this;
}

RealNumber& RealNumber::operator-=(const RealNumber& o) {
  rat_ -= o.rat_;
  for (const auto& [d, c] : o.surds_) add_surd(d, -c);
  return *this;
}

RealNumber operator*(const RealNumber& a, const RealNumber& b) {
  if (a.is_rational()) return b.scaled(a.rat_);
  if (b.is_rational()) return a.scaled(b.rat_);
  RealNumber r(a.rat_ * b.rat_);
  for (const auto& [d, c] : b.surds_) r.add_surd(d, a.rat_ * c);
  for (const auto& [d, c] : a.surds_) {
    r.add_surd(d, b.rat_ * c);
    for (const auto& [e, f] : b.surds_) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
      Integer rest = (d / g) * (e / g);
      Rational coef = c * f * g;
      if (rest == 1)
        r.rat_ += coef;
      else
        r.add_surd(rest, coef);
    }
  }
  return r;
}

RealNumber RealNumber::scaled(const Rational& c) const {
  if (c == 0) return RealNumber();
  RealNumber r = *this;
  r.rat_ *= c;
  for (auto& e : r.surds_) e.second *= c;
  return r;
}

RealNumber RealNumber::pow(unsigned long e) const {
  if (is_rational()) return RealNumber(rpow(rat_, static_cast<long>(e)));
  RealNumber result(1);
  RealNumber base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string RealNumber::to_string() const {
  std::string s;
  if (rat_ != 0 || surds_.empty()) s = dioph::to_string(rat_);
  for (const auto& [d, c] : surds_) {
    if (!s.empty()) s += " + ";
    s += "(" + dioph::to_string(c) + ")*sqrt(" + d.get_str() + ")";
  }
  return s;
}

double RealNumber::approx() const {
  double v = rat_.get_d();
  for (const auto& [d, c] : surds_) v += c.get_d() * std::sqrt(d.get_d());
  return v;
}

int compare(const RealNumber& a, const RealNumber& b, const Limits& limits) {
  return (a - b).sign(limits);
}

RealNumber parse_real(std::string_view text) { return Parser(text).parse(); }

RealInterval refine_constant(const RealNumber& value, unsigned bits,
                             const Limits& limits) {
  if (value.is_rational()) return RealInterval(value.rational_part(), bits);
  Rational target = rpow(Rational(2), -static_cast<long>(bits));
  for (unsigned p = std::max(bits + 8, limits.initial_bits);
       p <= std::max(limits.precision_cap_bits, bits + 64); p *= 2) {
    RealInterval iv = value.enclose(p);
    if (iv.width() <= target) return iv;
  }
  throw PrecisionError("cannot refine " + value.to_string());
}

}  // namespace dioph
