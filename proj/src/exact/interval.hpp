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

#include "exact/arith.hpp"

namespace dioph {

// Dyadic rounding to `bits` significant bits, outward in the given direction.
// Exact dyadics with few enough bits are returned unchanged.
Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);

// Closed interval [lo, hi] with dyadic endpoints. Every operation rounds
// outward at `precision` significant bits, so the result encloses the exact
// image of the operands. Operations are inclusion-monotone: evaluating an
// expression at higher precision yields a sub-interval.
class RealInterval {
 public:
  RealInterval() = default;
  explicit RealInterval(const Rational& exact, unsigned precision = 64);
  RealInterval(const Rational& lo, const Rational& hi, unsigned precision);

  // Enclosure of sqrt(d) for an integer d >= 0.
  static RealInterval sqrt_of(const Integer& d, unsigned precision);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  unsigned precision() const { return precision_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool subset_of(const RealInterval& other) const {
    return other.lo_ <= lo_ && hi_ <= other.hi_;
  }

  // +1 / -1 when every point has that sign, 0 for the point interval {0},
  // nullopt when the interval straddles or touches zero.
  std::optional<int> sign() const;

  RealInterval operator-() const;
  RealInterval abs() const;
  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  RealInterval scaled(const Rational& c) const;
  // Positive interval only. Integer power (negative allowed).
  RealInterval pow(long e) const;
  // Positive interval only. q-th root, q >= 1.
  RealInterval root(unsigned long q) const;

  std::string to_string() const;

 private:
  Rational lo_ = 0;
  Rational hi_ = 0;
  unsigned precision_ = 64;
};

}  // namespace dioph
