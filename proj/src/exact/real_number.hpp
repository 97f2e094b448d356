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

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exact/interval.hpp"

namespace dioph {

// An exact real of the form r + sum_k c_k * sqrt(d_k) with rational r, c_k
// and distinct squarefree d_k > 1. The set is a ring: products of square
// roots of integers are again square roots of integers. Since square roots
// of distinct squarefree integers are linearly independent over Q, a value
// is zero iff every coefficient vanishes, so signs are always decidable;
// nonzero signs are found by precision escalation.
class RealNumber {
 public:
  RealNumber() = default;
  RealNumber(const Rational& r) : rat_(r) {}  // NOLINT(implicit)
  RealNumber(long v) : rat_(v) {}             // NOLINT(implicit)

  static RealNumber sqrt(const Rational& x);
  // (p + q*sqrt(d)) / r
  static RealNumber quadratic(const Rational& p, const Rational& q,
                              const Integer& d, const Rational& r);
  static RealNumber golden_ratio();

  bool is_rational() const { return surds_.empty(); }
  bool is_zero() const { return surds_.empty() && rat_ == 0; }
  const Rational& rational_part() const { return rat_; }
  const std::vector<std::pair<Integer, Rational>>& surds() const {
    return surds_;
  }
  // Throws ValidationError when the value is irrational.
  const Rational& as_rational() const;

  RealInterval enclose(unsigned bits) const;

  // Exact sign in {-1, 0, 1}; PrecisionError past the cap.
  int sign(const Limits& limits = {}) const;
  Integer floor(const Limits& limits = {}) const;
  RealNumber abs(const Limits& limits = {}) const;

  RealNumber operator-() const;
  RealNumber& operator+=(const RealNumber& o);
  RealNumber& operator-=(const RealNumber& o);
  friend RealNumber operator+(RealNumber a, const RealNumber& b) { return a += b; }
  friend RealNumber operator-(RealNumber a, const RealNumber& b) { return a -= b; }
  friend RealNumber operator*(const RealNumber& a, const RealNumber& b);
  RealNumber scaled(const Rational& c) const;
  RealNumber pow(unsigned long e) const;

  friend bool operator==(const RealNumber& a, const RealNumber& b) {
    return a.rat_ == b.rat_ && a.surds_ == b.surds_;
  }

  std::string to_string() const;
  // Nearest double; for display and heuristics only.
  double approx() const;

 private:
  void add_surd(const Integer& d, const Rational& c);

  Rational rat_ = 0;
  std::vector<std::pair<Integer, Rational>> surds_;  // sorted by d
};

int compare(const RealNumber& a, const RealNumber& b, const Limits& limits = {});

// Parses the literal syntax used in configs: integers, p/q, decimals,
// sqrt(...), phi, + - * / and parentheses. Division is only by rationals.
RealNumber parse_real(std::string_view text);

// Descriptor "(p + q*sqrt(d))/r" (or a rational) refined to an enclosure of
// width at most 2^-bits.
RealInterval refine_constant(const RealNumber& value, unsigned bits,
                             const Limits& limits = {});

}  // namespace dioph
