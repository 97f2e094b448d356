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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "lattice/enumerate.hpp"

using namespace dioph;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

WeightedBox coord_box(std::vector<Rational> radii, bool strict) {
  std::vector<Magnitude> r;
  for (const auto& x : radii) r.emplace_back(x);
  return WeightedBox(r, std::vector<bool>(r.size(), strict));
}

// Index of the solution set of a congruence system, by counting solutions
// modulo the lcm of the moduli.
long brute_index(const CongruenceSystem& sys, std::size_t d) {
  long L = 1;
  for (const auto& c : sys) L = std::lcm(L, c.modulus.get_si());
  long total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= L;
  long count = 0;
  std::vector<long> z(d, 0);
  for (long t = 0; t < total; ++t) {
    long r = t;
    for (std::size_t i = 0; i < d; ++i) {
      z[i] = r % L;
      r /= L;
    }
    bool ok = true;
    for (const auto& c : sys) {
      long s = 0;
      for (std::size_t i = 0; i < d; ++i) s += c.coefficients[i].get_si() * z[i];
      if (s % c.modulus.get_si() != 0) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return total / count;
}

std::set<IntVector> naive_points(const IntegerLattice& L, const WeightedBox& box) {
  const std::size_t d = box.dimension();
  const std::size_t p = box.plain();
  std::set<IntVector> out;
  std::vector<long> lim(p);
  for (std::size_t j = 0; j < p; ++j) lim[j] = box.radius()[j].floor().get_si();
  IntVector z(d, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == d) {
      if (!is_zero(z) && L.contains(z) && box.contains(z)) out.insert(z);
      return;
    }
    if (k < p) {
      for (long v = -lim[k]; v <= lim[k]; ++v) {
        z[k] = v;
        rec(k + 1);
      }
      return;
    }
    double c = 0;
    for (std::size_t j = 0; j < p; ++j) c -= z[j].get_d() * box.shear()[j][k - p].approx();
    double r = box.radius()[k].approx();
    for (long v = static_cast<long>(std::floor(c - r)) - 1;
         v <= static_cast<long>(std::ceil(c + r)) + 1; ++v) {
      z[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

IntegerLattice random_lattice(std::mt19937_64& rng, std::size_t d) {
  CongruenceSystem sys;
  int count = static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) {
    LinearCongruence c;
    for (std::size_t j = 0; j < d; ++j) c.coefficients.emplace_back(static_cast<long>(rng() % 7) - 3);
    c.modulus = static_cast<long>(2 + rng() % 5);
    sys.push_back(c);
  }
  return congruences_to_lattice(sys, d);
}

}  // namespace

TEST_CASE("congruences_to_lattice examples") {
  IntegerLattice a = congruences_to_lattice({}, 2);
  CHECK(a.determinant() == 1);
  IntegerLattice b = congruences_to_lattice({{iv({1, 0}), 2}, {iv({0, 1}), 2}}, 2);
  CHECK(b.determinant() == 4);
  CHECK(b.contains(iv({2, -4})));
  CHECK_FALSE(b.contains(iv({1, 0})));
  CongruenceSystem sys = {{iv({1, 3}), 8}, {iv({1, 0}), 2}, {iv({0, 1}), 2}};
  IntegerLattice c = congruences_to_lattice(sys, 2);
  CHECK(c.determinant() == 16);
  CHECK(brute_index(sys, 2) == 16);
}

TEST_CASE("congruence lattice index matches brute-force counting") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    std::size_t d = 2 + rng() % 2;
    CongruenceSystem sys;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
      LinearCongruence c;
      for (std::size_t j = 0; j < d; ++j) c.coefficients.emplace_back(static_cast<long>(rng() % 9) - 4);
      c.modulus = static_cast<long>(2 + rng() % 4);
      sys.push_back(c);
    }
    IntegerLattice L = congruences_to_lattice(sys, d);
    CHECK(L.determinant() == brute_index(sys, d));
    for (const auto& row : L.basis()) {
      for (const auto& c : sys) {
        Integer s = 0;
        for (std::size_t j = 0; j < d; ++j) s += c.coefficients[j] * row[j];
        CHECK(s % c.modulus == 0);
      }
    }
  }
}

TEST_CASE("gamma_lattice 2-adic example and membership equivalence") {
  Weights w;
  w.m = w.n = 1;
  w.places = PlaceSet({Place::prime(2)});
  w.tau = {{2}};
  w.eta = {1, 1};
  SMatrix alpha = {{parse_snumber("2:1/3")}};
  IntegerLattice L = gamma_lattice(alpha, 1, 2, w);
  CHECK(L.determinant() == 16);
  // Direct evaluation: |a/3 + b|_2 < (1/2)^2 and |a|_2, |b|_2 <= 1/2.
  Place two = Place::prime(2);
  for (long a = -64; a <= 64; ++a)
    for (long b = -64; b <= 64; ++b) {
      Rational res = make_rational(a, 3) + b;
      bool direct = place_norm(res, two) < make_rational(1, 4) &&
                    place_norm(Rational(a), two) <= make_rational(1, 2) &&
                    place_norm(Rational(b), two) <= make_rational(1, 2);
      CHECK(direct == L.contains(iv({a, b})));
    }
}

TEST_CASE("gamma_lattice is the full lattice without finite places") {
  Weights w;
  w.m = 2;
  w.n = 1;
  w.places = PlaceSet::real();
  w.tau = {{2}};
  w.eta = {1, 1};
  SMatrix alpha = {{SNumber::constant({Place::infinity()}, RealNumber::sqrt(2))},
                   {SNumber::constant({Place::infinity()}, RealNumber::sqrt(3))}};
  CHECK(gamma_lattice(alpha, 1000, 5, w).determinant() == 1);
}

TEST_CASE("gamma_lattice with a real and a 2-adic place") {
  // tau_{1,2} = tau_{1,inf} = 1/2, H = 4: |a + b|_2 < 1/2 and 2 | a.
  Weights w;
  w.m = w.n = 1;
  w.places = PlaceSet({Place::prime(2), Place::infinity()});
  w.tau = {{make_rational(1, 2), make_rational(1, 2)}};
  w.eta = {1};
  SMatrix alpha = {{parse_snumber("2:1, inf:phi-1")}};
  IntegerLattice L = gamma_lattice(alpha, 1, 4, w);
  long count = 0;
  for (long a = 0; a < 8; ++a)
    for (long b = 0; b < 8; ++b) {
      bool direct = place_norm(Rational(a + b), Place::prime(2)) < make_rational(1, 2) &&
                    a % 2 == 0;
      CHECK(direct == L.contains(iv({a, b})));
      count += direct;
    }
  CHECK(L.determinant() == 64 / count);
  CHECK(L.determinant() == 8);
}

TEST_CASE("gamma lattice is closed under sums and negation") {
  Weights w;
  w.m = w.n = 1;
  w.places = PlaceSet({Place::prime(3)});
  w.tau = {{2}};
  w.eta = {1, 1};
  SMatrix alpha = {{parse_snumber("3:5/7")}};
  IntegerLattice L = gamma_lattice(alpha, make_rational(1, 2), 7, w);
  std::vector<IntVector> members;
  for (long a = -60; a <= 60 && members.size() < 30; ++a)
    for (long b = -60; b <= 60; ++b)
      if (L.contains(iv({a, b}))) members.push_back(iv({a, b}));
  for (const auto& x : members)
    for (const auto& y : members) {
      CHECK(L.contains(iv({x[0].get_si() + y[0].get_si(), x[1].get_si() + y[1].get_si()})));
      CHECK(L.contains(iv({-x[0].get_si(), -x[1].get_si()})));
    }
}

TEST_CASE("enumerate_box examples") {
  auto z2 = IntegerLattice::standard(2);
  auto r1 = enumerate_box(z2, coord_box({1, 1}, false), 100);
  CHECK(r1.points.size() == 8);
  CHECK_FALSE(r1.truncated);
  auto r2 = enumerate_box(z2, coord_box({make_rational(1, 2), make_rational(1, 2)}, true), 100);
  CHECK(r2.points.empty());
  auto two = congruences_to_lattice({{iv({1, 0}), 2}, {iv({0, 1}), 2}}, 2);
  auto r3 = enumerate_box(two, coord_box({2, 3}, false), 100);
  std::vector<IntVector> expect = {iv({-2, -2}), iv({-2, 0}), iv({-2, 2}), iv({0, -2}),
                                   iv({0, 2}),   iv({2, -2}), iv({2, 0}),  iv({2, 2})};
  CHECK(r3.points == expect);
  auto r4 = enumerate_box(z2, coord_box({1, 1}, false), 3);
  CHECK(r4.truncated);
  CHECK(r4.points.size() == 3);
}

TEST_CASE("strict and weak boundaries") {
  auto z2 = IntegerLattice::standard(2);
  CHECK(enumerate_box(z2, coord_box({1, 1}, true), 100).points.empty());
  auto half = WeightedBox({Magnitude(1), Magnitude(1)}, {true, false});
  CHECK(enumerate_box(z2, half, 100).points.size() == 2);
}

TEST_CASE("dimension limit is enforced") {
  Limits lim;
  lim.dimension_limit = 3;
  auto z4 = IntegerLattice::standard(4);
  CHECK_THROWS_AS(enumerate_box(z4, coord_box({1, 1, 1, 1}, false), 10, lim), ResourceError);
}

TEST_CASE("enumeration matches naive search on random boxes") {
  std::mt19937_64 rng(6);
  const RealNumber irr[] = {RealNumber::golden_ratio(), RealNumber::sqrt(2),
                            RealNumber::sqrt(3).scaled(make_rational(-1, 3)),
                            RealNumber(make_rational(2, 7))};
  for (int t = 0; t < 80; ++t) {
    std::size_t d = 1 + rng() % 4;
    std::size_t p = (t % 2 == 0) ? d : 1 + rng() % d;
    IntegerLattice L = random_lattice(rng, d);
    std::vector<Magnitude> r;
    std::vector<bool> strict;
    for (std::size_t k = 0; k < d; ++k) {
      if (k < p) {
        Rational base = make_rational(static_cast<long>(2 + rng() % 40), static_cast<long>(1 + rng() % 3));
        r.push_back(rng() % 2 ? Magnitude(base) : Magnitude(base).pow(make_rational(1, 2)));
      } else {
        r.push_back(Magnitude(make_rational(static_cast<long>(1 + rng() % 20), 10)));
      }
      strict.push_back(rng() % 2);
    }
    std::vector<std::vector<RealNumber>> shear;
    if (p < d) {
      shear.assign(p, std::vector<RealNumber>(d - p));
      for (auto& row : shear)
        for (auto& s : row) s = irr[rng() % 4];
    }
    WeightedBox box(p, shear, r, strict);
    auto got = enumerate_box(L, box, 1'000'000);
    std::set<IntVector> want = naive_points(L, box);
    std::set<IntVector> have(got.points.begin(), got.points.end());
    CHECK(have == want);
    CHECK(std::is_sorted(got.points.begin(), got.points.end()));
    for (const auto& z : got.points) CHECK(box.contains(z));
  }
}

TEST_CASE("successive minima examples") {
  auto z2 = IntegerLattice::standard(2);
  auto m1 = successive_minima(z2, coord_box({1, 1}, false));
  REQUIRE(m1.lambda.size() == 2);
  CHECK(m1.lambda[0].rational() == Rational(1));
  CHECK(m1.lambda[1].rational() == Rational(1));
  auto m2 = successive_minima(z2, coord_box({1, make_rational(1, 2)}, false));
  CHECK(m2.lambda[0].rational() == Rational(1));
  CHECK(m2.lambda[1].rational() == Rational(2));
  CHECK(m2.witnesses[0] == iv({1, 0}));
  CHECK(m2.witnesses[1] == iv({0, 1}));
  auto L = IntegerLattice::from_generators({iv({2, 0}), iv({1, 2})});
  auto m3 = successive_minima(L, coord_box({1, 1}, false));
  CHECK(m3.lambda[0].rational() == Rational(2));
  CHECK(m3.lambda[1].rational() == Rational(2));
  // Dilation scan oracle over lattice points with sup norm <= 4.
  std::vector<long> gauges;
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      if ((a || b) && L.contains(iv({a, b}))) gauges.push_back(std::max(std::abs(a), std::abs(b)));
  CHECK(*std::min_element(gauges.begin(), gauges.end()) == 2);
  for (const auto& m : {m1, m2, m3}) CHECK(check_sandwich(m).ok());
}

TEST_CASE("successive minima satisfy the sandwich and are attained") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t d = 1 + rng() % 4;
    IntegerLattice L = random_lattice(rng, d);
    std::size_t p = 1 + rng() % d;
    std::vector<Magnitude> r;
    for (std::size_t k = 0; k < d; ++k)
      r.push_back(Magnitude(make_rational(static_cast<long>(1 + rng() % 30), static_cast<long>(1 + rng() % 7))));
    std::vector<std::vector<RealNumber>> shear;
    if (p < d) shear.assign(p, std::vector<RealNumber>(d - p, RealNumber::golden_ratio()));
    WeightedBox box(p, shear, r, std::vector<bool>(d, false));
    auto rep = successive_minima(L, box);
    REQUIRE(rep.lambda.size() == d);
    CHECK(check_sandwich(rep).ok());
    for (std::size_t k = 0; k < d; ++k) {
      CHECK(L.contains(rep.witnesses[k]));
      CHECK(compare(box.gauge(rep.witnesses[k]), rep.lambda[k]) == 0);
      if (k) CHECK(compare(rep.lambda[k - 1], rep.lambda[k]) <= 0);
    }
    CHECK(rank(rep.witnesses) == d);
    // No lattice point lies strictly inside lambda_1 times the box.
    CHECK_FALSE(has_nonzero_point(L, WeightedBox(p, shear, r, std::vector<bool>(d, true))
                                         .scaled(rep.lambda[0])));
  }
}
