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

#include "exact/arith.hpp"

#include <cctype>

namespace dioph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ValidationError("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ValidationError("bad integer literal '" + std::string(s) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ValidationError("bad integer literal '" + std::string(s) + "'");
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ValidationError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_integer(text));
    // Decimal literal, read exactly.
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    std::string w(whole);
    if (w.empty() || w == "-" || w == "+") w += "0";
    Integer scale = ipow(Integer(10), frac.size());
    Integer f = frac.empty() ? Integer(0) : parse_integer(frac);
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))
      throw ValidationError("bad decimal literal '" + std::string(text) + "'");
    Integer num = abs(parse_integer(w)) * scale + f;
    if (neg) num = -num;
    return make_rational(num, scale);
  }
  return make_rational(parse_integer(text.substr(0, slash)),
                       parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, long exp) {
  if (exp >= 0) {
    return make_rational(ipow(base.get_num(), static_cast<unsigned long>(exp)),
                         ipow(base.get_den(), static_cast<unsigned long>(exp)));
  }
  if (base == 0) throw ValidationError("zero to a negative power");
  auto e = static_cast<unsigned long>(-exp);
  return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rational abs_of(const Rational& x) { return x < 0 ? Rational(-x) : x; }

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Place Place::prime(std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError("place " + std::to_string(p) + " is not a prime");
  return Place(p);
}

Place Place::parse(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  std::uint64_t p = 0;
  if (text.empty()) throw ValidationError("empty place");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ValidationError("bad place '" + std::string(text) + "'");
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
    if (p > (1ULL << 40)) throw ValidationError("place too large");
  }
  return prime(p);
}

std::string Place::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(p_);
}

long Valuation::value() const {
  if (!v_) throw ValidationError("valuation of zero has no finite value");
  return *v_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() == b.is_infinite()
               ? std::strong_ordering::equal
               : (a.is_infinite() ? std::strong_ordering::greater
                                  : std::strong_ordering::less);
  }
  return *a.v_ <=> *b.v_;
}

Valuation valuation(const Integer& x, std::uint64_t p) {
  if (x == 0) return Valuation::infinite();
  Integer prime(static_cast<unsigned long>(p));
  Integer rest;
  long v = static_cast<long>(
      mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
  return Valuation(v);
}

Valuation valuation(const Rational& x, const Place& p) {
  if (!p.is_finite()) throw ValidationError("valuation needs a finite place");
  if (x == 0) return Valuation::infinite();
  return Valuation(valuation(x.get_num(), p.p()).value() -
                   valuation(x.get_den(), p.p()).value());
}

Rational place_norm(const Rational& x, const Place& place) {
  if (place.is_infinite()) return abs_of(x);
  Valuation v = valuation(x, place);
  if (v.is_infinite()) return Rational(0);
  return rpow(Rational(static_cast<unsigned long>(place.p())), -v.value());
}

Integer residue_mod_prime_power(const Rational& x, std::uint64_t p,
                                unsigned long k) {
  Integer mod = ipow(Integer(static_cast<unsigned long>(p)), k);
  if (k == 0) return 0;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), mod.get_mpz_t()) == 0)
    throw ValidationError("value " + to_string(x) + " is not " +
                          std::to_string(p) + "-integral");
  Integer r = x.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Integer crt_solve(const std::vector<Congruence>& congruences) {
  Integer x = 0;
  Integer mod = 1;
  for (const auto& c : congruences) {
    if (c.modulus <= 0) throw ValidationError("CRT modulus must be positive");
    Integer r = c.residue;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), c.modulus.get_mpz_t());
    // Solve x + mod * t == r (mod c.modulus).
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), mod.get_mpz_t(),
               c.modulus.get_mpz_t());
    Integer diff = r - x;
    if (diff % g != 0)
      throw ValidationError("inconsistent congruences: moduli " + to_string(mod) +
                            " and " + to_string(c.modulus) + " share a factor");
    Integer step = c.modulus / g;
    Integer k = (diff / g) * s;
    mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), step.get_mpz_t());
    x += mod * k;
    mod *= step;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  }
  return x;
}

}  // namespace dioph
