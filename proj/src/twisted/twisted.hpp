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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dirichlet/solver.hpp"
#include "twisted/strong_approx.hpp"

namespace dioph {

using RealMatrix = std::vector<std::vector<RealNumber>>;
using RealVector = std::vector<RealNumber>;

enum class TwistedMode {
  kReal,      // S = {inf}
  kFinite,    // inf not in S
  kInfinite,  // inf in S together with finite places
};
std::string to_string(TwistedMode mode);
TwistedMode twisted_mode(const Weights& w);

// g_t u_alpha Z^{m+n} with e^t = H: (a, b) maps to
// (H^{tau_i} (a alpha - b)_i, H^{-eta_j} a_j).
class FlowLattice {
 public:
  FlowLattice(RealMatrix alpha, Integer H, WeightsReal w);

  double t() const;
  const Integer& H() const { return H_; }
  // All (a, b) with |g_t u_alpha (a, b)|_inf <= R.
  WeightedBox ball(const Magnitude& R) const;
  // Enclosure of g_t u_alpha (a, b), residual coordinates first.
  std::vector<RealInterval> image(const IntVector& a, const IntVector& b,
                                  unsigned bits = 128) const;

 private:
  RealMatrix alpha_;
  Integer H_;
  WeightsReal w_;
};

// Nearest integer to x, or sign(x) when that is 0 (with sign(0) = +1).
// Ties round up.
Integer round_nonzero(const RealNumber& x, const Limits& limits = {});

// The gamma-independent part of the construction at one height H: the
// lattice Gamma(eps, H), the body K_H, and independent minima witnesses.
// Internally (a, b) stands for the form a alpha + b.
struct TwistedSetup {
  TwistedMode mode = TwistedMode::kReal;
  Weights w;
  SMatrix alpha;          // alpha - alpha_shift, real parts in [0, 1)
  IntMatrix alpha_shift;  // integer shift K with alpha = normalized + K
  Rational eps;
  Integer H;
  IntegerLattice lattice;
  WeightedBox body;  // closure of K_H
  std::vector<IntVector> basis;
  std::vector<Magnitude> lambda;
  Magnitude lambda_bound;  // Minkowski bound on the last minimum
  RatMatrix inverse;       // inverse of the basis matrix
  // kFinite: first coordinate of each basis vector leaving K_H, b before a.
  std::vector<std::size_t> exceed;
  // kInfinite: D = ceil(H^{eta_1}) + P * sum |a^(l)_1|.
  Rational pad;
};

struct NamedConstant {
  std::string name;
  Magnitude value;
};

struct TwistedTrace {
  TwistedMode mode = TwistedMode::kReal;
  std::vector<IntVector> basis;
  std::vector<Magnitude> lambda;
  std::vector<std::size_t> exceed;
  std::vector<SNumber> x;     // span coordinates of the target
  std::vector<Rational> r;    // chosen coefficients
  std::vector<std::string> windows;
  Rational pad;
  IntMatrix alpha_shift;
  IntVector gamma_shift;
};

struct TwistedCertificate {
  IntVector a;
  IntVector b;  // residual a alpha - b - gamma
  Integer H;
  Rational eps;
  Magnitude residual_finite;  // tau-norm over the finite places
  Magnitude residual_real;    // tau-norm at infinity
  std::vector<NamedConstant> constants;
  std::vector<BoundCheck> checks;
  TwistedTrace trace;
  bool verified() const;
};

// True when Gamma(eps, H) meets K_H only in 0.
bool is_witness(const SMatrix& alpha, const Rational& eps, const Integer& H, const Weights& w,
                const Limits& limits = {});
std::vector<Integer> find_witness_heights(const SMatrix& alpha, const Rational& eps,
                                          const std::vector<Integer>& candidates,
                                          const Weights& w, const Limits& limits = {});
// ceil(start * factor^k) for k = 0, 1, ... while <= stop, deduplicated.
std::vector<Integer> geometric_heights(const Integer& start, const Rational& factor,
                                       const Integer& stop);
// Largest eps in (0, 1] (to 2^-bits) for which some candidate is a witness.
Rational default_epsilon(const SMatrix& alpha, const std::vector<Integer>& candidates,
                         const Weights& w, unsigned bits = 12, const Limits& limits = {});

// ValidationError when H is not a witness height.
TwistedSetup prepare_twisted(const SMatrix& alpha, const Rational& eps, const Integer& H,
                             const Weights& w, const Limits& limits = {});
TwistedCertificate construct_twisted(const TwistedSetup& setup, const SVector& gamma,
                                     const Limits& limits = {});

TwistedCertificate construct_real(const RealMatrix& alpha, const RealVector& gamma,
                                  const Rational& eps, const Integer& H, const WeightsReal& w,
                                  const Limits& limits = {});
TwistedCertificate construct_s_finite(const SMatrix& alpha, const SVector& gamma,
                                      const Rational& eps, const Integer& H, const Weights& w,
                                      const Limits& limits = {});
// S = {inf} is handed to construct_real.
TwistedCertificate construct_s_infinite(const SMatrix& alpha, const SVector& gamma,
                                        const Rational& eps, const Integer& H, const Weights& w,
                                        const Limits& limits = {});

// The explicit constants attached to (eps, H, w); `pad` is D for kInfinite.
std::vector<NamedConstant> twisted_constants(const Rational& eps, const Integer& H,
                                             const Weights& w, const Rational& pad);

// Recomputes residuals and constants from the original alpha and gamma and
// checks every bound of the certificate. Also fills the residual norms.
std::vector<BoundCheck> verify_twisted(const SMatrix& alpha, const SVector& gamma,
                                       const Weights& w, TwistedCertificate& cert,
                                       const Limits& limits = {});

// Caches the setup per height for one (alpha, eps, w).
class TwistedSolver {
 public:
  TwistedSolver(SMatrix alpha, Rational eps, Weights w, Limits limits = {});

  // nullptr when H is not a witness height.
  const TwistedSetup* setup(const Integer& H);
  TwistedCertificate construct(const Integer& H, const SVector& gamma);

  // Certificates at increasing witness heights taken from `candidates`,
  // keeping a height only when its bounds rule out every earlier solution:
  // |a_1| >= H^{eta_1} beyond all earlier upper bounds when inf is in S with
  // finite places, otherwise a residual bound below every earlier residual.
  std::vector<TwistedCertificate> distinct_sequence(const SVector& gamma,
                                                    const std::vector<Integer>& candidates,
                                                    std::size_t count);

 private:
  SMatrix alpha_;
  Rational eps_;
  Weights w_;
  Limits limits_;
  std::map<Integer, std::optional<TwistedSetup>> cache_;
};

SMatrix real_matrix_to_s(const RealMatrix& alpha);
SVector real_vector_to_s(const RealVector& gamma);

}  // namespace dioph
