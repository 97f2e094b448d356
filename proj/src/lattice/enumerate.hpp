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

#include <functional>
#include <vector>

#include "lattice/box.hpp"
#include "lattice/lattice.hpp"

namespace dioph {

struct EnumerationResult {
  std::vector<IntVector> points;  // lexicographically sorted
  bool truncated = false;
};

// Visits every nonzero lattice point of the box exactly once (in a fixed
// order). `visit` returns false to stop early; for_each then returns false.
bool for_each_box_point(const IntegerLattice& lattice, const WeightedBox& box,
                        const std::function<bool(const IntVector&)>& visit,
                        const Limits& limits = {});

EnumerationResult enumerate_box(const IntegerLattice& lattice, const WeightedBox& box,
                                std::size_t cap, const Limits& limits = {});

bool has_nonzero_point(const IntegerLattice& lattice, const WeightedBox& box,
                       const Limits& limits = {});

struct MinimaReport {
  std::vector<Magnitude> lambda;
  std::vector<IntVector> witnesses;
  Integer determinant;
  Magnitude volume;
};

// Successive minima for the closure of the box.
MinimaReport successive_minima(const IntegerLattice& lattice, const WeightedBox& box,
                               const Limits& limits = {});

struct SandwichCheck {
  bool lower = false;  // (2^d/d!) det <= Vol prod lambda
  bool upper = false;  // Vol prod lambda <= 2^d det
  bool ok() const { return lower && upper; }
};
SandwichCheck check_sandwich(const MinimaReport& report, const Limits& limits = {});

}  // namespace dioph
