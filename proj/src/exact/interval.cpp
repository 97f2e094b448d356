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

#include "exact/interval.hpp"

#include <algorithm>

namespace dioph {

namespace {

// floor(log2(x)) for x > 0.
long floor_log2(const Rational& x) {
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  // x >= 2^e ?
  Integer lhs = x.get_num();
  Integer rhs = x.get_den();
  if (e >= 0)
    rhs <<= static_cast<unsigned long>(e);
  else
    lhs <<= static_cast<unsigned long>(-e);
  return lhs >= rhs ? e : e - 1;
}

Rational scale_pow2(const Integer& m, long s) {
  // m / 2^s
  if (s >= 0) return make_rational(m, Integer(1) << static_cast<unsigned long>(s));
  return Rational(m << static_cast<unsigned long>(-s));
}

Rational round_positive(const Rational& x, unsigned bits, bool up) {
  long s = static_cast<long>(bits) - floor_log2(x);
  Integer num = x.get_num();
  Integer den = x.get_den();
  if (s >= 0)
    num <<= static_cast<unsigned long>(s);
  else
    den <<= static_cast<unsigned long>(-s);
  Integer q;
  if (up)
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  else
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return scale_pow2(q, s);
}

// floor(x^(1/q)) scaled: returns the largest m with (m/2^s)^q <= x.
Rational root_bound(const Rational& x, unsigned long q, unsigned bits, bool up) {
  if (x == 0) return 0;
  long s = static_cast<long>(bits) - floor_log2(x) / static_cast<long>(q) + 1;
  // m = floor((x * 2^{q s})^{1/q})
  Integer num = x.get_num();
  Integer den = x.get_den();
  long qs = static_cast<long>(q) * s;
  if (qs >= 0)
    num <<= static_cast<unsigned long>(qs);
  else
    den <<= static_cast<unsigned long>(-qs);
  Integer t;
  mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer m;
  int exact = mpz_root(m.get_mpz_t(), t.get_mpz_t(), q);
  if (up) {
    // (m+1)^q > t + frac >= x*2^{qs} unless the root and the division are exact.
    bool division_exact = (t * den == num);
    if (!(exact && division_exact)) m += 1;
  }
  return scale_pow2(m, s);
}

}  // namespace

Rational round_down(const Rational& x, unsigned bits) {
  if (x == 0) return x;
  if (x > 0) return round_positive(x, bits, false);
  return -round_positive(-x, bits, true);
}

Rational round_up(const Rational& x, unsigned bits) {
  if (x == 0) return x;
  if (x > 0) return round_positive(x, bits, true);
  return -round_positive(-x, bits, false);
}

RealInterval::RealInterval(const Rational& exact, unsigned precision)
    : lo_(exact), hi_(exact), precision_(precision) {}

RealInterval::RealInterval(const Rational& lo, const Rational& hi,
                           unsigned precision)
    : lo_(round_down(lo, precision)),
      hi_(round_up(hi, precision)),
      precision_(precision) {
  if (lo > hi) throw ValidationError("interval with lo > hi");
}

RealInterval RealInterval::sqrt_of(const Integer& d, unsigned precision) {
  if (d < 0) throw ValidationError("square root of a negative integer");
  RealInterval r;
  r.precision_ = precision;
  r.lo_ = root_bound(Rational(d), 2, precision, false);
  r.hi_ = root_bound(Rational(d), 2, precision, true);
  return r;
}

std::optional<int> RealInterval::sign() const {
  if (lo_ > 0) return 1;
  if (hi_ < 0) return -1;
  if (lo_ == 0 && hi_ == 0) return 0;
  return std::nullopt;
}

RealInterval RealInterval::operator-() const {
  RealInterval r;
  r.lo_ = -hi_;
  r.hi_ = -lo_;
  r.precision_ = precision_;
  return r;
}

RealInterval RealInterval::abs() const {
  if (lo_ >= 0) return *this;
  if (hi_ <= 0) return -*this;
  RealInterval r;
  r.lo_ = 0;
  r.hi_ = std::max(Rational(-lo_), hi_);
  r.precision_ = precision_;
  return r;
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  unsigned p = std::min(a.precision_, b.precision_);
  return RealInterval(a.lo_ + b.lo_, a.hi_ + b.hi_, p);
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  return a + (-b);
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  unsigned p = std::min(a.precision_, b.precision_);
  Rational c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  Rational lo = *std::min_element(c, c + 4);
  Rational hi = *std::max_element(c, c + 4);
  return RealInterval(lo, hi, p);
}

RealInterval RealInterval::scaled(const Rational& c) const {
  if (c >= 0) return RealInterval(lo_ * c, hi_ * c, precision_);
  return RealInterval(hi_ * c, lo_ * c, precision_);
}

RealInterval RealInterval::pow(long e) const {
  if (lo_ <= 0) throw ValidationError("interval power needs a positive interval");
  if (e >= 0) return RealInterval(rpow(lo_, e), rpow(hi_, e), precision_);
  return RealInterval(rpow(hi_, e), rpow(lo_, e), precision_);
}

RealInterval RealInterval::root(unsigned long q) const {
  if (lo_ < 0) throw ValidationError("interval root needs a nonnegative interval");
  if (q == 1) return *this;
  RealInterval r;
  r.precision_ = precision_;
  r.lo_ = root_bound(lo_, q, precision_, false);
  r.hi_ = root_bound(hi_, q, precision_, true);
  return r;
}

std::string RealInterval::to_string() const {
  return "[" + dioph::to_string(lo_) + ", " + dioph::to_string(hi_) + "]";
}

}  // namespace dioph
