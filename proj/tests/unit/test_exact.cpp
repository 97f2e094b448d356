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

#include <random>

#include "doctest.h"
#include "exact/snumber.hpp"

using namespace dioph;

namespace {

Rational random_rational(std::mt19937_64& rng, long range = 1000) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, range);
  return make_rational(Integer(num(rng)), Integer(den(rng)));
}

Rational nonzero_rational(std::mt19937_64& rng) {
  Rational r = 0;
  while (r == 0) r = random_rational(rng);
  return r;
}

}  // namespace

TEST_CASE("valuation examples") {
  CHECK(valuation(Rational(12), Place::prime(2)) == Valuation(2));
  CHECK(valuation(make_rational(1, 6), Place::prime(3)) == Valuation(-1));
  Valuation z = valuation(Rational(0), Place::prime(5));
  CHECK(z.is_infinite());
  CHECK(z > Valuation(1'000'000));
}

TEST_CASE("place norm examples") {
  CHECK(place_norm(Rational(12), Place::prime(2)) == make_rational(1, 4));
  CHECK(place_norm(make_rational(1, 6), Place::prime(3)) == Rational(3));
  CHECK(place_norm(make_rational(-7, 2), Place::infinity()) == make_rational(7, 2));
  CHECK(place_norm(Rational(0), Place::prime(7)) == 0);
}

TEST_CASE("place parsing rejects composites") {
  CHECK_THROWS_AS(Place::prime(4), ValidationError);
  CHECK(Place::parse("inf").is_infinite());
  CHECK(Place::parse("7").p() == 7);
}

TEST_CASE("crt examples") {
  CHECK(crt_solve({{2, 1}, {3, 2}}) == 5);
  CHECK(crt_solve({{5, 0}}) == 0);
  // Brute-force oracle over 0..215.
  long found = -1;
  for (long x = 0; x < 216; ++x)
    if (x % 8 == 3 && x % 27 == 5) {
      found = x;
      break;
    }
  CHECK(found == 59);
  CHECK(crt_solve({{8, 3}, {27, 5}}) == found);
}

TEST_CASE("crt rejects inconsistent moduli and accepts consistent ones") {
  CHECK_THROWS_AS(crt_solve({{4, 1}, {6, 2}}), ValidationError);
  CHECK(crt_solve({{4, 1}, {6, 5}}) == 5);
}

TEST_CASE("crt agrees with brute force on random coprime systems") {
  std::mt19937_64 rng(11);
  const long primes[] = {2, 3, 5, 7, 11, 13};
  for (int t = 0; t < 200; ++t) {
    std::vector<Congruence> sys;
    long mod = 1;
    for (long p : primes) {
      if (rng() % 2) continue;
      long e = 1 + static_cast<long>(rng() % 2);
      long m = e == 1 ? p : p * p;
      sys.push_back({Integer(m), Integer(static_cast<long>(rng() % 1000) - 500)});
      mod *= m;
    }
    if (sys.empty()) continue;
    long x = crt_solve(sys).get_si();
    CHECK(x >= 0);
    CHECK(x < mod);
    for (const auto& c : sys) {
      Integer diff = Integer(x) - c.residue;
      CHECK(diff % c.modulus == 0);
    }
  }
}

TEST_CASE("refine_constant golden ratio at 10 bits") {
  RealInterval iv = refine_constant(RealNumber::golden_ratio(), 10);
  CHECK(iv.lo() >= make_rational(1617, 1000));
  CHECK(iv.hi() <= make_rational(1619, 1000));
  CHECK(iv.width() <= make_rational(1, 1024));
  // Newton oracle for sqrt(5): s_k decreases to sqrt(5) from above.
  Rational s = 3;
  for (int i = 0; i < 6; ++i) s = (s + 5 / s) / 2;
  Rational upper = (1 + s) / 2;
  Rational lower = (1 + 5 / s) / 2;
  CHECK(iv.lo() <= upper);
  CHECK(iv.hi() >= lower);
}

TEST_CASE("refine_constant rational is degenerate") {
  for (unsigned bits : {1u, 10u, 200u}) {
    RealInterval iv = refine_constant(RealNumber(make_rational(3, 4)), bits);
    CHECK(iv.lo() == make_rational(3, 4));
    CHECK(iv.hi() == make_rational(3, 4));
  }
}

TEST_CASE("refine_constant sqrt 2 at 20 bits") {
  RealInterval iv = refine_constant(RealNumber::sqrt(2), 20);
  CHECK(iv.lo() * iv.lo() <= 2);
  CHECK(iv.hi() * iv.hi() >= 2);
  CHECK(iv.width() <= make_rational(1, 1 << 20));
  // Integer square root oracle: floor(sqrt(2 * 4^30)) / 2^30.
  Integer big = Integer(2) << 60;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), big.get_mpz_t());
  Rational lo = make_rational(r, Integer(1) << 30);
  Rational hi = make_rational(r + 1, Integer(1) << 30);
  CHECK(iv.hi() >= lo);
  CHECK(iv.lo() <= hi);
}

TEST_CASE("quadratic descriptor with negative discriminant is rejected") {
  CHECK_THROWS_AS(RealNumber::quadratic(1, 1, -5, 2), ValidationError);
  CHECK_THROWS_AS(parse_real("sqrt(-2)"), ValidationError);
}

TEST_CASE("real literal parsing") {
  CHECK(parse_real("(1+sqrt(5))/2") == RealNumber::golden_ratio());
  CHECK(parse_real("phi") == RealNumber::golden_ratio());
  CHECK(parse_real("sqrt(8)") == RealNumber::sqrt(2).scaled(2));
  CHECK(parse_real("0.25") == RealNumber(make_rational(1, 4)));
  CHECK(parse_real("-3/4 + 1/4") == RealNumber(make_rational(-1, 2)));
  CHECK_THROWS_AS(parse_real("1/sqrt(2)"), ValidationError);
  CHECK_THROWS_AS(parse_real("foo"), ValidationError);
}

TEST_CASE("exact signs of surd combinations") {
  RealNumber phi = RealNumber::golden_ratio();
  CHECK((phi * phi - phi - RealNumber(1)).is_zero());
  CHECK((phi - RealNumber(make_rational(1618, 1000))).sign() == 1);
  CHECK((RealNumber::sqrt(2) + RealNumber::sqrt(3) - RealNumber::sqrt(10)).sign() == -1);
  CHECK((RealNumber::sqrt(2) * RealNumber::sqrt(6)).is_rational() == false);
  CHECK(RealNumber::sqrt(2) * RealNumber::sqrt(8) == RealNumber(4));
  CHECK(phi.floor() == 1);
  CHECK((-phi).floor() == -2);
}

TEST_CASE("precision cap surfaces as an error") {
  Limits tight;
  tight.precision_cap_bits = 64;
  // phi^40 is within ~1e-8 of the integer L_40.
  RealNumber phi = RealNumber::golden_ratio();
  RealNumber close = phi.pow(40) - RealNumber(Rational(Integer("228826127")));
  CHECK(close.sign() == -1);
  RealNumber v = RealNumber::sqrt(2) - RealNumber(make_rational(Integer("14142135623730950488016887242097"),
                                                               Integer("10000000000000000000000000000000")));
  // The 32-digit literal rounds up the last digit, so it exceeds sqrt(2).
  CHECK_THROWS_AS(v.sign(tight), PrecisionError);
  CHECK(v.sign() == -1);
}

TEST_CASE("magnitude comparisons are exact") {
  Magnitude a = Magnitude(2).pow(make_rational(1, 3));
  Magnitude b = Magnitude(5).pow(make_rational(1, 4));
  CHECK(compare(a, b) < 0);
  CHECK(compare(Magnitude(4).pow(make_rational(1, 2)), Magnitude(2)) == 0);
  Magnitude s = Magnitude::abs(RealNumber::sqrt(2));
  CHECK(compare(s.pow(2), Magnitude(2)) == 0);
  CHECK(compare(s * s, Magnitude(2)) == 0);
  CHECK(Magnitude(8).pow(make_rational(2, 3)).rational() == Rational(4));
  Magnitude phi = Magnitude::abs(RealNumber::golden_ratio());
  CHECK(compare(phi * phi, phi) > 0);
  CHECK(Magnitude(make_rational(10, 1)).pow(make_rational(3, 2)).floor() == 31);
  CHECK(Magnitude(make_rational(10, 1)).pow(make_rational(3, 2)).ceil() == 32);
  CHECK(Magnitude(9).pow(make_rational(1, 2)).ceil() == 3);
}

TEST_CASE("snumber literal syntax") {
  SNumber x = parse_snumber("2:7/4, inf:sqrt(5)/2");
  CHECK(x.rational_at(Place::prime(2)) == make_rational(7, 4));
  CHECK(x.at(Place::infinity()) == RealNumber::sqrt(5).scaled(make_rational(1, 2)));
  CHECK(place_norm(x, Place::prime(2)).rational() == Rational(4));
  CHECK_THROWS_AS(parse_snumber("2:sqrt(2)"), ValidationError);
  CHECK_THROWS_AS(parse_snumber("4:1"), ValidationError);
  CHECK_THROWS_AS(parse_snumber("2:1, 2:3"), ValidationError);
}

TEST_CASE("field identities on random rationals") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (a != 0) CHECK(a * (1 / a) == 1);
    Rational s = a + b;
    CHECK(s.get_den() > 0);
    CHECK(gcd(s.get_num(), s.get_den()) == 1);
  }
}

TEST_CASE("ultrametric inequality at finite places") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 500; ++t) {
    Rational x = random_rational(rng), y = random_rational(rng);
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      Place pl = Place::prime(p);
      Rational nx = place_norm(x, pl), ny = place_norm(y, pl), nxy = place_norm(x + y, pl);
      CHECK(nxy <= std::max(nx, ny));
      if (nx != ny) CHECK(nxy == std::max(nx, ny));
    }
  }
}

TEST_CASE("product formula") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    Rational x = nonzero_rational(rng);
    Rational prod = place_norm(x, Place::infinity());
    Integer nd = abs(x.get_num()) * x.get_den();
    for (std::uint64_t p = 2; p <= 1000; ++p) {
      if (!is_prime(p)) continue;
      if (nd % static_cast<unsigned long>(p) != 0) continue;
      prod *= place_norm(x, Place::prime(p));
    }
    CHECK(prod == 1);
  }
}

TEST_CASE("interval evaluation is nested across precisions") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    // Random expression DAG over sqrt leaves and rationals.
    std::vector<int> leaf_d;
    std::vector<Rational> leaf_q;
    for (int i = 0; i < 4; ++i) {
      leaf_d.push_back(2 + static_cast<int>(rng() % 30));
      leaf_q.push_back(random_rational(rng, 50));
    }
    std::vector<int> ops, lhs, rhs;
    int nodes = 8;
    for (int i = 0; i < nodes; ++i) {
      ops.push_back(static_cast<int>(rng() % 3));
      lhs.push_back(static_cast<int>(rng() % static_cast<unsigned>(8 + i)));
      rhs.push_back(static_cast<int>(rng() % static_cast<unsigned>(8 + i)));
    }
    auto eval = [&](unsigned bits) {
      std::vector<RealInterval> v;
      for (int d : leaf_d) v.push_back(RealInterval::sqrt_of(d, bits));
      for (const auto& q : leaf_q) v.push_back(RealInterval(q, bits));
      for (int i = 0; i < nodes; ++i) {
        const RealInterval& a = v[static_cast<std::size_t>(lhs[static_cast<std::size_t>(i)])];
        const RealInterval& b = v[static_cast<std::size_t>(rhs[static_cast<std::size_t>(i)])];
        switch (ops[static_cast<std::size_t>(i)]) {
          case 0: v.push_back(a + b); break;
          case 1: v.push_back(a - b); break;
          default: v.push_back(a * b); break;
        }
      }
      return v;
    };
    auto exact = [&]() {
      std::vector<RealNumber> v;
      for (int d : leaf_d) v.push_back(RealNumber::sqrt(d));
      for (const auto& q : leaf_q) v.push_back(RealNumber(q));
      for (int i = 0; i < nodes; ++i) {
        const RealNumber& a = v[static_cast<std::size_t>(lhs[static_cast<std::size_t>(i)])];
        const RealNumber& b = v[static_cast<std::size_t>(rhs[static_cast<std::size_t>(i)])];
        switch (ops[static_cast<std::size_t>(i)]) {
          case 0: v.push_back(a + b); break;
          case 1: v.push_back(a - b); break;
          default: v.push_back(a * b); break;
        }
      }
      return v;
    }();
    auto v64 = eval(64), v128 = eval(128), v256 = eval(256);
    for (std::size_t i = 0; i < v64.size(); ++i) {
      CHECK(v128[i].subset_of(v64[i]));
      CHECK(v256[i].subset_of(v128[i]));
      RealInterval e = exact[i].enclose(512);
      CHECK(e.hi() >= v256[i].lo());
      CHECK(e.lo() <= v256[i].hi());
    }
  }
}
