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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dirichlet/solver.hpp"
#include "experiments/rng.hpp"

namespace dioph {

// Haar-random point of Z_S^n: at a finite place a uniform integer below
// p^precision, at infinity k / 2^precision with k uniform below 2^precision.
std::vector<SNumber> sample_gamma(std::uint64_t seed, const PlaceSet& places, int n,
                                  unsigned precision = 64);
std::vector<SNumber> sample_gamma(SplitRng& rng, const PlaceSet& places, int n,
                                  unsigned precision = 64);

// Query for the set of gamma with phi-weighted residual at most delta. The
// eta-norm is taken over (a, b) when infinity is not in S and over a when it
// is; in the latter case b is absent and minimized over.
struct TargetQuery {
  IntVector a;
  std::optional<IntVector> b;
  Rational delta = 0;
};

bool target_membership(const SMatrix& alpha, const std::vector<SNumber>& gamma,
                       const TargetQuery& q, const Weights& w,
                       const Limits& limits = {});

// min over b of |a alpha - b - gamma|_tau with infinity in S; writes the
// minimizing b.
Magnitude min_residual_over_b(const SMatrix& alpha, const IntVector& a,
                              const std::vector<SNumber>& gamma, const Weights& w,
                              IntVector* b_out = nullptr, const Limits& limits = {});

struct LiminfRecord {
  std::vector<SNumber> gamma;
  std::vector<Integer> A_grid;
  // stat[k] = min over 0 < |phi|_eta <= A_grid[k] of |phi|_eta times the
  // residual |a alpha - b - gamma|_tau (b minimized when infinity is in S).
  // Only the first stat.size() grid points are complete.
  std::vector<Magnitude> stat;
  std::vector<IntVector> arg_a;
  std::vector<IntVector> arg_b;
  std::uint64_t seed = 0;
  bool truncated = false;

  bool monotone(const Limits& limits = {}) const;
};

LiminfRecord liminf_statistic(const SMatrix& alpha, const std::vector<SNumber>& gamma,
                              const std::vector<Integer>& A_grid, const Weights& w,
                              const Limits& limits = {});

enum class CIKind { kDyadic, kRotation };
std::string to_string(CIKind k);
CIKind parse_ci_kind(const std::string& s);

// Dyadic: S_i = (2^-i Z / Z)^n, delta_i = 2^-i in every coordinate.
// Rotation (n = 1): S_i = {i alpha mod 1}, delta_i = 1 / (i log(i + 1)).
struct CIExperiment {
  CIKind kind = CIKind::kDyadic;
  int n = 1;
  RealNumber rotation = RealNumber::golden_ratio();
  std::vector<Rational> c;
  std::vector<Rational> C;
  std::size_t samples = 10000;
  int level_first = 1;
  int level_last = 20;
  // Tail windows [start, level_last]; empty means four evenly spaced starts.
  std::vector<int> window_starts;
  std::uint64_t seed = 0;
  unsigned precision = 64;
};

struct CIWindow {
  int first = 0;
  int last = 0;
  std::size_t hits_c = 0;
  std::size_t hits_C = 0;
  double estimate_c = 0;
  double estimate_C = 0;
  double difference = 0;
  // 1.96-sigma binomial half-widths.
  double half_width_c = 0;
  double half_width_C = 0;
  double half_width_difference = 0;
};

struct CIResult {
  CIExperiment spec;
  std::vector<CIWindow> windows;
  // hits[s][i - level_first] for scale c and scale C.
  std::vector<std::vector<bool>> hits_c;
  std::vector<std::vector<bool>> hits_C;
  std::size_t subset_violations = 0;
  // Sampling resolution 2^-precision per coordinate.
  double discretization_error = 0;

  bool subset_ok() const { return subset_violations == 0; }
};

void validate_ci(const CIExperiment& spec);
CIResult ci_simulation(const CIExperiment& spec);

}  // namespace dioph
