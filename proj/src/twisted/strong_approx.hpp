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

#include "exact/snumber.hpp"

namespace dioph {

// Archimedean constraint on a strong-approximation output.
class ApproxWindow {
 public:
  // |r - 2P| <= P
  static ApproxWindow positive(const Rational& P);
  // |r + 2P| <= P
  static ApproxWindow negative(const Rational& P);
  // |r - center| <= radius
  static ApproxWindow proximity(const RealNumber& center, const Rational& radius);

  const RealNumber& center() const { return center_; }
  const Rational& radius() const { return radius_; }
  bool contains(const Rational& r, const Limits& limits = {}) const;
  std::string to_string() const;

 private:
  RealNumber center_;
  Rational radius_;
};

// A rational r with |r - x_nu|_nu <= 1 for every finite place nu in
// `targets`, |r|_sigma <= 1 for every other prime sigma, and r inside the
// window. r = z / D with D = prod nu^{e_nu} is fixed modulo 1 by the CRT;
// among the admissible values the one closest to the window center is
// returned, ties to the smaller. ValidationError when the window holds no
// admissible value.
Rational strong_approx(const std::map<Place, Rational>& targets, const ApproxWindow& window,
                       const Limits& limits = {});

struct StrongApproxCheck {
  bool finite = false;
  bool outside = false;
  bool window = false;
  bool ok() const { return finite && outside && window; }
};

// Independent recomputation of every constraint.
StrongApproxCheck check_strong_approx(const Rational& r,
                                      const std::map<Place, Rational>& targets,
                                      const ApproxWindow& window, const Limits& limits = {});

}  // namespace dioph
