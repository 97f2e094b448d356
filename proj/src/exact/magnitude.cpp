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

#include "exact/magnitude.hpp"

#include <cmath>

namespace dioph {

namespace {

// Exact q-th root of a nonnegative rational, if it exists.
std::optional<Rational> exact_root(const Rational& x, unsigned long q) {
  if (q == 1) return x;
  Integer n, d;
  if (!mpz_root(n.get_mpz_t(), x.get_num_mpz_t(), q)) return std::nullopt;
  if (!mpz_root(d.get_mpz_t(), x.get_den_mpz_t(), q)) return std::nullopt;
  return make_rational(n, d);
}

unsigned long to_ulong(const Integer& x) {
  if (!x.fits_ulong_p()) throw ResourceError("exponent too large");
  return x.get_ui();
}

}  // namespace

Magnitude::Magnitude(const Rational& c) : coef_(c) {
  if (c < 0) throw ValidationError("magnitude must be nonnegative");
}

Magnitude Magnitude::abs(const RealNumber& x, const Limits& limits) {
  if (x.is_rational()) return Magnitude(abs_of(x.rational_part()));
  return power(x.abs(limits), 1, limits);
}

Magnitude Magnitude::power(const RealNumber& x, const Rational& e,
                           const Limits& limits) {
  int s = x.sign(limits);
  if (s < 0) throw ValidationError("power of a negative base");
  if (s == 0) {
    if (e <= 0) throw ValidationError("zero to a nonpositive power");
    return Magnitude();
  }
  Magnitude m(1);
  if (e != 0) m.factors_.emplace_back(x, e);
  m.normalize();
  return m;
}

void Magnitude::normalize() {
  if (coef_ == 0) {
    factors_.clear();
    return;
  }
  std::vector<std::pair<RealNumber, Rational>> out;
  for (auto& [base, e] : factors_) {
    if (e == 0) continue;
    if (base.is_rational()) {
      const Rational& b = base.rational_part();
      if (e.get_den() == 1) {
        coef_ *= rpow(b, e.get_num().get_si());
        continue;
      }
      if (auto r = exact_root(b, to_ulong(e.get_den()))) {
        coef_ *= rpow(*r, e.get_num().get_si());
        continue;
      }
    }
    bool merged = false;
    for (auto& [b2, e2] : out) {
      if (b2 == base) {
        e2 += e;
        merged = true;
        break;
      }
    }
    if (!merged) out.emplace_back(base, e);
  }
  std::erase_if(out, [](const auto& f) { return f.second == 0; });
  factors_ = std::move(out);
}

std::optional<Rational> Magnitude::rational() const {
  if (factors_.empty()) return coef_;
  return std::nullopt;
}

Magnitude Magnitude::pow(const Rational& e) const {
  if (coef_ == 0) {
    if (e <= 0) throw ValidationError("zero to a nonpositive power");
    return Magnitude();
  }
  Magnitude m(1);
  if (e.get_den() == 1) {
    m.coef_ = rpow(coef_, e.get_num().get_si());
  } else {
    m.factors_.emplace_back(RealNumber(coef_), e);
  }
  for (const auto& [b, x] : factors_) m.factors_.emplace_back(b, x * e);
  m.normalize();
  return m;
}

Magnitude Magnitude::inverse() const {
  if (coef_ == 0) throw ValidationError("inverse of zero");
  return pow(-1);
}

Magnitude operator*(const Magnitude& a, const Magnitude& b) {
  if (a.coef_ == 0 || b.coef_ == 0) return Magnitude();
  Magnitude m(a.coef_ * b.coef_);
  m.factors_ = a.factors_;
  m.factors_.insert(m.factors_.end(), b.factors_.begin(), b.factors_.end());
  m.normalize();
  return m;
}

RealInterval Magnitude::enclose(unsigned bits) const {
  RealInterval acc(coef_, bits);
  for (const auto& [b, e] : factors_) {
    unsigned p = bits + 16;
    RealInterval base = b.enclose(p);
    while (base.lo() <= 0) {
      p *= 2;
      if (p > (1u << 20)) throw PrecisionError("cannot separate base from zero");
      base = b.enclose(p);
    }
    RealInterval t = base.pow(e.get_num().get_si()).root(to_ulong(e.get_den()));
    acc = acc * t;
  }
  return acc;
}

Rational Magnitude::upper_rational(unsigned bits) const {
  if (factors_.empty()) return coef_;
  return enclose(bits).hi();
}

Rational Magnitude::lower_rational(unsigned bits) const {
  if (factors_.empty()) return coef_;
  Rational lo = enclose(bits).lo();
  return lo < 0 ? Rational(0) : lo;
}

Integer Magnitude::floor(const Limits& limits) const {
  if (factors_.empty()) return floor_of(coef_);
  Integer k = floor_of(lower_rational());
  while (compare(*this, Magnitude(Rational(k + 1)), limits) >= 0) ++k;
  while (compare(*this, Magnitude(Rational(k)), limits) < 0) --k;
  return k;
}

Integer Magnitude::ceil(const Limits& limits) const {
  if (factors_.empty()) return ceil_of(coef_);
  Integer k = floor(limits);
  return compare(*this, Magnitude(Rational(k)), limits) == 0 ? k : k + 1;
}

std::string Magnitude::to_string() const {
  std::string s = dioph::to_string(coef_);
  for (const auto& [b, e] : factors_) {
    s += " * (" + b.to_string() + ")^(" + dioph::to_string(e) + ")";
  }
  return s;
}

double Magnitude::approx() const {
  double v = coef_.get_d();
  for (const auto& [b, e] : factors_) v *= std::pow(b.approx(), e.get_d());
  return v;
}

int compare(const Magnitude& a, const Magnitude& b, const Limits& limits) {
  if (a.is_zero() || b.is_zero()) return (a.is_zero() ? 0 : 1) - (b.is_zero() ? 0 : 1);
  auto ra = a.rational();
  auto rb = b.rational();
  if (ra && rb) return cmp(*ra, *rb) < 0 ? -1 : (*ra == *rb ? 0 : 1);
  // Cheap interval test first.
  RealInterval ia = a.enclose(64);
  RealInterval ib = b.enclose(64);
  if (ia.hi() < ib.lo()) return -1;
  if (ib.hi() < ia.lo()) return 1;
  Magnitude r = a / b;
  if (auto q = r.rational()) return *q < 1 ? -1 : (*q == 1 ? 0 : 1);
  // r^L = c^L * P / Q with integer exponents.
  Integer L = 1;
  for (const auto& f : r.factors_) L = lcm_of(L, f.second.get_den());
  unsigned long l = to_ulong(L);
  RealNumber P(rpow(r.coef_, static_cast<long>(l)));
  RealNumber Q(1);
  for (const auto& [base, e] : r.factors_) {
    Integer k = e.get_num() * L / e.get_den();
    if (k > 0)
      P = P * base.pow(to_ulong(k));
    else
      Q = Q * base.pow(to_ulong(-k));
  }
  return (P - Q).sign(limits);
}

Magnitude max(const Magnitude& a, const Magnitude& b, const Limits& limits) {
  return compare(a, b, limits) >= 0 ? a : b;
}

Magnitude min(const Magnitude& a, const Magnitude& b, const Limits& limits) {
  return compare(a, b, limits) <= 0 ? a : b;
}

}  // namespace dioph
