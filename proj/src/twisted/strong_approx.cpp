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


#include "twisted/strong_approx.hpp"

namespace dioph {

ApproxWindow ApproxWindow::positive(const Rational& P) {
  if (P <= 0) throw ValidationError("window half-width must be positive");
  ApproxWindow w;
  w.center_ = RealNumber(2 * P);
  w.radius_ = P;
  return w;
}

ApproxWindow ApproxWindow::negative(const Rational& P) {
  ApproxWindow w = positive(P);
  w.center_ = -w.center_;
  return w;
}

ApproxWindow ApproxWindow::proximity(const RealNumber& center, const Rational& radius) {
  if (radius < 0) throw ValidationError("window radius must be nonnegative");
  ApproxWindow w;
  w.center_ = center;
  w.radius_ = radius;
  return w;
}

bool ApproxWindow::contains(const Rational& r, const Limits& limits) const {
  return less_equal(Magnitude::abs(RealNumber(r) - center_, limits), Magnitude(radius_), limits);
}

std::string ApproxWindow::to_string() const {
  return "|r - (" + center_.to_string() + ")| <= " + dioph::to_string(radius_);
}

Rational strong_approx(const std::map<Place, Rational>& targets, const ApproxWindow& window,
                       const Limits& limits) {
  Integer D = 1;
  std::vector<std::pair<Place, unsigned long>> exps;
  for (const auto& [place, x] : targets) {
    if (!place.is_finite()) throw ValidationError("strong approximation targets must be finite places");
    Valuation v = valuation(x, place);
    unsigned long e = (v.is_infinite() || v.value() >= 0) ? 0 : static_cast<unsigned long>(-v.value());
    exps.emplace_back(place, e);
    D *= ipow(Integer(static_cast<unsigned long>(place.p())), e);
  }
  std::vector<Congruence> cs;
  for (const auto& [place, e] : exps) {
    if (e == 0) continue;
    Integer mod = ipow(Integer(static_cast<unsigned long>(place.p())), e);
    cs.push_back({mod, residue_mod_prime_power(targets.at(place) * D, place.p(), e)});
  }
  Rational r0 = make_rational(crt_solve(cs), D);
  // Nearest admissible value r0 + t to the center, ties to the smaller.
  RealNumber shifted = window.center() - RealNumber(r0) + RealNumber(make_rational(1, 2));
  Integer t = shifted.floor(limits);
  if (shifted == RealNumber(Rational(t))) t -= 1;
  Rational r = r0 + t;
  if (!window.contains(r, limits))
    throw ValidationError("strong approximation window " + window.to_string() +
                          " holds no admissible rational");
  return r;
}

StrongApproxCheck check_strong_approx(const Rational& r,
                                      const std::map<Place, Rational>& targets,
                                      const ApproxWindow& window, const Limits& limits) {
  StrongApproxCheck c;
  c.finite = true;
  for (const auto& [place, x] : targets)
    if (place_norm(r - x, place) > 1) c.finite = false;
  Integer den = r.get_den();
  for (const auto& [place, x] : targets) {
    Integer p(static_cast<unsigned long>(place.p()));
    while (den % p == 0) den /= p;
  }
  c.outside = den == 1;
  c.window = window.contains(r, limits);
  return c;
}

}  // namespace dioph
