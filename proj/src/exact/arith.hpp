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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exact/errors.hpp"

namespace dioph {

using Integer = mpz_class;
// mpq_class keeps the denominator positive and the fraction reduced after
// every arithmetic operation; we canonicalize on construction from parts.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

Integer ipow(const Integer& base, unsigned long exp);
// base^exp for a (possibly negative) integer exponent; base must be nonzero
// when exp < 0.
Rational rpow(const Rational& base, long exp);
Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);
Integer lcm_of(const Integer& a, const Integer& b);
Rational abs_of(const Rational& x);
bool is_prime(std::uint64_t p);

// A place of Q: a rational prime or the archimedean place.
class Place {
 public:
  static Place infinity() { return Place(); }
  static Place prime(std::uint64_t p);
  static Place parse(std::string_view text);

  bool is_infinite() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  // Only meaningful for finite places.
  std::uint64_t p() const { return p_; }
  std::string to_string() const;

  friend auto operator<=>(const Place&, const Place&) = default;

 private:
  Place() = default;
  explicit Place(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;  // 0 encodes the archimedean place
};

// v_p of a rational. Zero maps to the +infinity sentinel, which compares
// above every finite value.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  explicit Valuation(long v) : v_(v) {}

  bool is_infinite() const { return !v_.has_value(); }
  long value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a,
                                          const Valuation& b);

 private:
  Valuation() = default;
  std::optional<long> v_;
};

Valuation valuation(const Integer& x, std::uint64_t p);
Valuation valuation(const Rational& x, const Place& p);

// |x|_p = p^{-v_p(x)} at a finite place, |x| at infinity.
Rational place_norm(const Rational& x, const Place& place);

// Reduces x (which must be p-integral) modulo p^k to the canonical residue
// in [0, p^k).
Integer residue_mod_prime_power(const Rational& x, std::uint64_t p,
                                unsigned long k);

struct Congruence {
  Integer modulus;
  Integer residue;
};

// Unique x in [0, lcm of moduli) satisfying every congruence. Non-coprime
// moduli are accepted when the residues agree; otherwise ValidationError.
Integer crt_solve(const std::vector<Congruence>& congruences);

}  // namespace dioph
