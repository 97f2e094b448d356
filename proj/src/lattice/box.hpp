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
#include "exact/magnitude.hpp"

namespace dioph {

// Symmetric body {z : |f_k(z)| <= r_k (or < r_k)} on R^d. The first `plain`
// coordinates use f_k(z) = z_k. The remaining q = d - plain coordinates are
// sheared: f_{plain+k}(z) = z_{plain+k} + sum_{j<plain} z_j * shear[j][k].
// The form matrix is unipotent, so Vol = prod 2 r_k.
class WeightedBox {
 public:
  WeightedBox() = default;
  // Coordinate box.
  WeightedBox(std::vector<Magnitude> radius, std::vector<bool> strict);
  WeightedBox(std::size_t plain, std::vector<std::vector<RealNumber>> shear,
              std::vector<Magnitude> radius, std::vector<bool> strict);

  std::size_t dimension() const { return radius_.size(); }
  std::size_t plain() const { return plain_; }
  const std::vector<std::vector<RealNumber>>& shear() const { return shear_; }
  const std::vector<Magnitude>& radius() const { return radius_; }
  const std::vector<bool>& strict() const { return strict_; }

  RealNumber form(std::size_t k, const IntVector& z) const;
  bool contains(const IntVector& z, const Limits& limits = {}) const;
  // max_k |f_k(z)| / r_k
  Magnitude gauge(const IntVector& z, const Limits& limits = {}) const;
  Magnitude volume() const;

  WeightedBox scaled(const Magnitude& lambda) const;
  WeightedBox closed() const;

 private:
  std::size_t plain_ = 0;
  std::vector<std::vector<RealNumber>> shear_;
  std::vector<Magnitude> radius_;
  std::vector<bool> strict_;
};

}  // namespace dioph
