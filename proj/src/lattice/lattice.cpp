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

#include "lattice/lattice.hpp"

namespace dioph {

IntegerLattice IntegerLattice::standard(std::size_t d) {
  IntegerLattice l;
  l.basis_ = identity_matrix(d);
  l.det_ = 1;
  return l;
}

IntegerLattice IntegerLattice::from_generators(const IntMatrix& generators) {
  if (generators.empty()) throw ValidationError("lattice needs generators");
  const std::size_t d = generators[0].size();
  IntegerLattice l;
  l.basis_ = hermite_normal_form(generators);
  if (l.basis_.size() != d) throw ValidationError("lattice generators are not full rank");
  l.det_ = 1;
  for (std::size_t i = 0; i < d; ++i) l.det_ *= l.basis_[i][i];
  return l;
}

std::optional<IntVector> IntegerLattice::coordinates(const IntVector& z) const {
  const std::size_t d = dimension();
  if (z.size() != d) throw ValidationError("vector dimension differs from lattice");
  // HNF rows are upper triangular with pivot i in column i.
  IntVector rest = z;
  IntVector x(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (rest[i] % basis_[i][i] != 0) return std::nullopt;
    x[i] = rest[i] / basis_[i][i];
    if (x[i] == 0) continue;
    for (std::size_t j = i; j < d; ++j) rest[j] -= x[i] * basis_[i][j];
  }
  return x;
}

bool IntegerLattice::contains(const IntVector& z) const {
  return coordinates(z).has_value();
}

IntegerLattice congruences_to_lattice(const CongruenceSystem& system, std::size_t d) {
  IntMatrix basis = identity_matrix(d);
  for (const auto& c : system) {
    if (c.modulus < 1) throw ValidationError("congruence modulus must be positive");
    if (c.coefficients.size() != d)
      throw ValidationError("congruence length differs from dimension");
    if (c.modulus == 1) continue;
    // Kernel of x -> sum_i x_i v_i (mod M), v_i = c . basis_i, read off the
    // HNF of the rows (v_i, e_i) and (M, 0).
    IntMatrix aug(d + 1, IntVector(d + 1, 0));
    for (std::size_t i = 0; i < d; ++i) {
      Integer v = 0;
      for (std::size_t j = 0; j < d; ++j) v += c.coefficients[j] * basis[i][j];
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), c.modulus.get_mpz_t());
      aug[i][0] = v;
      aug[i][i + 1] = 1;
    }
    aug[d][0] = c.modulus;
    IntMatrix h = hermite_normal_form(aug);
    IntMatrix kernel;
    for (const auto& row : h) {
      if (row[0] != 0) continue;
      kernel.emplace_back(row.begin() + 1, row.end());
    }
    if (kernel.size() != d) throw InternalError("congruence kernel has wrong rank");
    basis = hermite_normal_form(multiply(kernel, basis));
  }
  return IntegerLattice::from_generators(basis);
}

unsigned long valuation_threshold(std::uint64_t p, const Magnitude& bound,
                                  bool strict, const Limits& limits) {
  Rational pk = 1;
  Rational step = make_rational(1, Integer(static_cast<unsigned long>(p)));
  for (unsigned long k = 0; k < 4096; ++k) {
    int c = compare(Magnitude(pk), bound, limits);
    if (strict ? c < 0 : c <= 0) return k;
    pk *= step;
  }
  throw ResourceError("valuation threshold exceeds 4096");
}

LinearCongruence residual_congruence(const SMatrix& alpha, const Place& place,
                                     std::size_t i, unsigned long k, int b_sign) {
  const std::size_t m = alpha.size();
  const std::size_t n = alpha.empty() ? 0 : alpha[0].size();
  LinearCongruence c;
  c.modulus = ipow(Integer(static_cast<unsigned long>(place.p())), k);
  c.coefficients.assign(m + n, 0);
  for (std::size_t j = 0; j < m; ++j) {
    const Rational& x = alpha[j][i].rational_at(place);
    if (valuation(x, place) < Valuation(0))
      throw ValidationError("alpha entry " + to_string(x) + " is not " +
                            place.to_string() + "-integral");
    c.coefficients[j] = residue_mod_prime_power(x, place.p(), k);
  }
  c.coefficients[m + i] = b_sign;
  return c;
}

CongruenceSystem gamma_congruences(const SMatrix& alpha, const Rational& eps,
                                   const Integer& H, const Weights& w,
                                   const Limits& limits) {
  if (eps <= 0) throw ValidationError("epsilon must be positive");
  if (H <= 0) throw ValidationError("H must be positive");
  const std::size_t m = static_cast<std::size_t>(w.m);
  const std::size_t n = static_cast<std::size_t>(w.n);
  if (alpha.size() != m || (m > 0 && alpha[0].size() != n))
    throw ValidationError("alpha shape differs from weights");
  CongruenceSystem sys;
  Magnitude base(eps / Rational(H));
  for (const auto& place : w.places.finite()) {
    for (std::size_t i = 0; i < n; ++i) {
      Magnitude bound = base.pow(w.tau_at(static_cast<int>(i), place));
      unsigned long k = valuation_threshold(place.p(), bound, true, limits);
      if (k == 0) continue;
      sys.push_back(residual_congruence(alpha, place, i, k, 1));
    }
    const std::size_t cover = w.places.has_infinity() ? m : m + n;
    for (std::size_t j = 0; j < cover; ++j) {
      LinearCongruence c;
      c.coefficients.assign(m + n, 0);
      c.coefficients[j] = 1;
      c.modulus = static_cast<unsigned long>(place.p());
      sys.push_back(c);
    }
  }
  return sys;
}

IntegerLattice gamma_lattice(const SMatrix& alpha, const Rational& eps,
                             const Integer& H, const Weights& w,
                             const Limits& limits) {
  return congruences_to_lattice(gamma_congruences(alpha, eps, H, w, limits),
                                static_cast<std::size_t>(w.m + w.n));
}

}  // namespace dioph
