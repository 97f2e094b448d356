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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exact/real_number.hpp"

namespace dioph {

// A nonnegative real of the form c * prod_k x_k^{e_k} with rational c >= 0,
// positive RealNumber bases x_k and rational exponents e_k. Quantities such
// as |x|^{1/tau}, H^{eta} or (eps/H)^{tau} are Magnitudes. Comparison raises
// both sides to the lcm of the exponent denominators, which turns it into a
// sign test on a RealNumber and is therefore exact.
class Magnitude {
 public:
  Magnitude() = default;  // zero
  Magnitude(const Rational& c);  // NOLINT(implicit)
  Magnitude(long c) : Magnitude(Rational(c)) {}  // NOLINT(implicit)

  // |x|
  static Magnitude abs(const RealNumber& x, const Limits& limits = {});
  // x^e for x > 0 (x = 0 allowed when e > 0).
  static Magnitude power(const RealNumber& x, const Rational& e,
                         const Limits& limits = {});

  bool is_zero() const { return coef_ == 0; }
  const Rational& coefficient() const { return coef_; }
  const std::vector<std::pair<RealNumber, Rational>>& factors() const {
    return factors_;
  }
  // The exact value when it is rational.
  std::optional<Rational> rational() const;

  Magnitude pow(const Rational& e) const;
  Magnitude inverse() const;
  friend Magnitude operator*(const Magnitude& a, const Magnitude& b);
  friend Magnitude operator/(const Magnitude& a, const Magnitude& b) {
    return a * b.inverse();
  }

  RealInterval enclose(unsigned bits) const;
  // A rational r >= value with r - value small; exact when rational.
  Rational upper_rational(unsigned bits = 64) const;
  Rational lower_rational(unsigned bits = 64) const;
  Integer floor(const Limits& limits = {}) const;
  Integer ceil(const Limits& limits = {}) const;

  std::string to_string() const;
  double approx() const;

  friend int compare(const Magnitude& a, const Magnitude& b,
                     const Limits& limits);

 private:
  void normalize();

  Rational coef_ = 0;
  std::vector<std::pair<RealNumber, Rational>> factors_;
};

int compare(const Magnitude& a, const Magnitude& b, const Limits& limits = {});
inline bool less(const Magnitude& a, const Magnitude& b, const Limits& l = {}) {
  return compare(a, b, l) < 0;
}
inline bool less_equal(const Magnitude& a, const Magnitude& b,
                       const Limits& l = {}) {
  return compare(a, b, l) <= 0;
}
Magnitude max(const Magnitude& a, const Magnitude& b, const Limits& limits = {});
Magnitude min(const Magnitude& a, const Magnitude& b, const Limits& limits = {});

}  // namespace dioph
