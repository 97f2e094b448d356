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

#include <vector>

#include "lattice/matrix.hpp"
#include "norms/weights.hpp"

namespace dioph {

// Full-rank sublattice of Z^d, kept in Hermite normal form.
class IntegerLattice {
 public:
  IntegerLattice() = default;
  static IntegerLattice standard(std::size_t d);
  // Rows of `basis` span the lattice; they must have full rank d.
  static IntegerLattice from_generators(const IntMatrix& generators);

  std::size_t dimension() const { return basis_.size(); }
  const IntMatrix& basis() const { return basis_; }
  const Integer& determinant() const { return det_; }
  bool contains(const IntVector& z) const;
  // Integer coordinates of z in the basis; nullopt when z is not a member.
  std::optional<IntVector> coordinates(const IntVector& z) const;

 private:
  IntMatrix basis_;
  Integer det_ = 1;
};

struct LinearCongruence {
  IntVector coefficients;  // c with c.z == 0 (mod modulus)
  Integer modulus;
};
using CongruenceSystem = std::vector<LinearCongruence>;

IntegerLattice congruences_to_lattice(const CongruenceSystem& system, std::size_t d);

// The congruence conditions of the twisted lattice in coordinates (a, b):
// at each finite place nu and row i, |a alpha_nu + b|_nu < (eps/H)^{tau},
// plus nu | (a, b) when infinity is not in S, nu | a otherwise.
CongruenceSystem gamma_congruences(const SMatrix& alpha, const Rational& eps,
                                   const Integer& H, const Weights& w,
                                   const Limits& limits = {});
IntegerLattice gamma_lattice(const SMatrix& alpha, const Rational& eps,
                             const Integer& H, const Weights& w,
                             const Limits& limits = {});

// Smallest k >= 0 with p^{-k} < bound (strict) or p^{-k} <= bound.
unsigned long valuation_threshold(std::uint64_t p, const Magnitude& bound,
                                  bool strict, const Limits& limits = {});

// Residue of the rational alpha entries modulo p^k in coordinates (a, b)
// for the form a alpha_{., i} + sign * b_i.
LinearCongruence residual_congruence(const SMatrix& alpha, const Place& place,
                                     std::size_t i, unsigned long k, int b_sign);

}  // namespace dioph
