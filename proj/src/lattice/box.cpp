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

#include "lattice/box.hpp"

namespace dioph {

WeightedBox::WeightedBox(std::vector<Magnitude> radius, std::vector<bool> strict)
    : WeightedBox(radius.size(), {}, std::move(radius), std::move(strict)) {}

WeightedBox::WeightedBox(std::size_t plain, std::vector<std::vector<RealNumber>> shear,
                         std::vector<Magnitude> radius, std::vector<bool> strict)
    : plain_(plain),
      shear_(std::move(shear)),
      radius_(std::move(radius)),
      strict_(std::move(strict)) {
  if (strict_.size() != radius_.size())
    throw ValidationError("box strictness flags differ in length from radii");
  if (plain_ > radius_.size()) throw ValidationError("box plain count too large");
  const std::size_t q = radius_.size() - plain_;
  if (q > 0) {
    if (shear_.size() != plain_) throw ValidationError("box shear has wrong row count");
    for (const auto& row : shear_)
      if (row.size() != q) throw ValidationError("box shear has wrong column count");
  }
  for (const auto& r : radius_)
    if (r.is_zero()) throw ValidationError("box radii must be positive");
}

RealNumber WeightedBox::form(std::size_t k, const IntVector& z) const {
  if (k < plain_) return RealNumber(Rational(z[k]));
  RealNumber v(Rational(z[k]));
  for (std::size_t j = 0; j < plain_; ++j) {
    if (z[j] == 0) continue;
    v += shear_[j][k - plain_].scaled(Rational(z[j]));
  }
  return v;
}

bool WeightedBox::contains(const IntVector& z, const Limits& limits) const {
  for (std::size_t k = 0; k < dimension(); ++k) {
    int c = compare(Magnitude::abs(form(k, z), limits), radius_[k], limits);
    if (strict_[k] ? c >= 0 : c > 0) return false;
  }
  return true;
}

Magnitude WeightedBox::gauge(const IntVector& z, const Limits& limits) const {
  Magnitude g;
  for (std::size_t k = 0; k < dimension(); ++k) {
    Magnitude v = Magnitude::abs(form(k, z), limits);
    if (v.is_zero()) continue;
    g = max(g, v / radius_[k], limits);
  }
  return g;
}

Magnitude WeightedBox::volume() const {
  Magnitude v(1);
  for (const auto& r : radius_) v = v * r * Magnitude(2);
  return v;
}

WeightedBox WeightedBox::scaled(const Magnitude& lambda) const {
  WeightedBox b = *this;
  for (auto& r : b.radius_) r = r * lambda;
  return b;
}

WeightedBox WeightedBox::closed() const {
  WeightedBox b = *this;
  b.strict_.assign(b.strict_.size(), false);
  return b;
}

}  // namespace dioph
