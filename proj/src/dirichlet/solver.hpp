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
#include <vector>

#include "lattice/enumerate.hpp"

namespace dioph {

struct BoundCheck {
  std::string name;
  bool ok = false;
};

struct DirichletSolution {
  IntVector a;
  IntVector b;
  Integer H;
  // residuals[i][k] = |(a alpha)_i - b_i| at w.places.places()[k]
  std::vector<std::vector<Magnitude>> residuals;
  std::vector<BoundCheck> checks;
  bool a_zero = false;
  // For H strictly above this value every solution has a != 0.
  std::optional<Magnitude> a_nonzero_threshold;
  bool verified() const;
};

// Validates w and that alpha is m x n with a value at every place of w.
void check_alpha_shape(const SMatrix& alpha, const Weights& w);

// Residual a alpha - b - gamma at every place of w (gamma may be null).
std::vector<SNumber> residual_vector(const SMatrix& alpha, const IntVector& a,
                                     const IntVector& b, const Weights& w,
                                     const std::vector<SNumber>* gamma = nullptr);

// Flips the sign so the first nonzero entry is positive.
IntVector sign_normalized(IntVector z);

// Tie order between sign-normalized vectors: compare |z| from the last
// coordinate backwards, then plain lexicographic order. Prefers e_1.
bool tie_less(const IntVector& x, const IntVector& y);

// Nonzero (a, b) with |(a alpha)_i - b_i|_nu <= nu H^{-tau} at finite places,
// < H^{-tau} at infinity, |a_j| <= H^{eta_j} and, without infinity,
// |b_i| <= H^{eta_{m+i}}. Among all solutions the one of least eta-norm is
// returned, ties broken by tie_less.
DirichletSolution solve_homogeneous(const SMatrix& alpha, const Integer& H,
                                    const Weights& w, const Limits& limits = {});

// Recomputes every inequality from scratch through the place norms.
std::vector<BoundCheck> verify_homogeneous(const SMatrix& alpha, const IntVector& a,
                                           const IntVector& b, const Integer& H,
                                           const Weights& w, const Limits& limits = {},
                                           std::vector<std::vector<Magnitude>>* residuals = nullptr);

std::optional<Magnitude> a_nonzero_threshold(const Weights& w);

struct EpsilonStar {
  // H * min |a alpha - b|_tau over nonzero (a, b) in the eta-box.
  Magnitude value;
  IntVector a;
  IntVector b;
  bool exact = false;  // value is rational
};

EpsilonStar epsilon_star(const SMatrix& alpha, const Integer& H, const Weights& w,
                         const Limits& limits = {});

struct ProfilePoint {
  Integer H;
  Magnitude eps_star;
  IntVector a;
  IntVector b;
  bool exact = false;
};

enum class Classification { kSingularEvidence, kNonSingularEvidence };
std::string to_string(Classification c);

struct SingularityVerdict {
  std::vector<ProfilePoint> profile;
  Classification classification = Classification::kSingularEvidence;
  std::vector<Integer> witness_heights;
  Rational threshold;
};

// 2^k for k = first..last.
std::vector<Integer> dyadic_grid(unsigned first, unsigned last);

// NonSingularEvidence iff every dyadic band met by the upper half of the grid
// contains a height with eps_star >= threshold.
SingularityVerdict singularity_scan(const SMatrix& alpha, const std::vector<Integer>& grid,
                                    const Rational& threshold, const Weights& w,
                                    const Limits& limits = {});

}  // namespace dioph
