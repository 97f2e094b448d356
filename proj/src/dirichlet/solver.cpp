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


#include "dirichlet/solver.hpp"

#include <algorithm>
#include <functional>

namespace dioph {

namespace {

struct Family {
  IntegerLattice lattice;
  WeightedBox box;
};

using FamilyAt = std::function<Family(const Magnitude& t, bool strict)>;
using Objective = std::function<Magnitude(const IntVector&)>;

std::optional<IntVector> first_point(const Family& f, const Limits& limits) {
  std::optional<IntVector> out;
  for_each_box_point(
      f.lattice, f.box,
      [&](const IntVector& z) {
        out = z;
        return false;
      },
      limits);
  return out;
}

}  // namespace

void check_alpha_shape(const SMatrix& alpha, const Weights& w) {
  require_valid(w);
  const auto m = static_cast<std::size_t>(w.m);
  const auto n = static_cast<std::size_t>(w.n);
  if (alpha.size() != m) throw ValidationError("alpha must have m rows");
  for (const auto& row : alpha) {
    if (row.size() != n) throw ValidationError("alpha must have n columns");
    for (const auto& x : row)
      for (const auto& p : w.places.places())
        if (!x.has(p))
          throw ValidationError("alpha entry lacks a value at place " + p.to_string());
  }
}


bool tie_less(const IntVector& x, const IntVector& y) {
  for (std::size_t k = x.size(); k-- > 0;) {
    int c = cmp(abs(x[k]), abs(y[k]));
    if (c != 0) return c < 0;
  }
  return x < y;
}

namespace {

struct Minimum {
  Magnitude value;
  IntVector point;
};

// Least objective over a nested family whose member at t is exactly the set
// of nonzero points with objective <= t (< t when strict). Bisection brings
// the upper bound close; strict queries then walk down to the minimum.
std::optional<Minimum> minimize(const FamilyAt& family, const Objective& objective,
                                const Magnitude& start, const Limits& limits) {
  auto p = first_point(family(start, false), limits);
  if (!p) return std::nullopt;
  Magnitude hi = objective(*p);
  // A family member containing every minimizer; the minimum may be zero,
  // which no box of positive radius describes exactly.
  Magnitude holder = start;
  bool holder_strict = false;
  Rational lo = 0;
  for (int it = 0; it < 80 && !hi.is_zero(); ++it) {
    Rational h = hi.upper_rational(64);
    if (h - lo <= h / (1 << 20)) break;
    Rational mid = (lo + h) / 2;
    if (auto q = first_point(family(Magnitude(mid), false), limits)) {
      hi = objective(*q);
      holder = Magnitude(mid);
    } else {
      lo = mid;
    }
  }
  while (!hi.is_zero()) {
    auto q = first_point(family(hi, true), limits);
    if (!q) break;
    holder = hi;
    holder_strict = true;
    hi = objective(*q);
  }
  if (!hi.is_zero()) {
    holder = hi;
    holder_strict = false;
  }
  Family last = family(holder, holder_strict);
  EnumerationResult all = enumerate_box(last.lattice, last.box, limits.point_cap, limits);
  std::optional<IntVector> best;
  for (const auto& z : all.points) {
    IntVector s = sign_normalized(z);
    if (compare(objective(s), hi, limits) != 0) continue;
    if (!best || tie_less(s, *best)) best = s;
  }
  if (!best) throw InternalError("minimum point vanished on re-enumeration");
  return Minimum{hi, *best};
}

Magnitude H_pow(const Integer& H, const Rational& e) { return Magnitude(Rational(H)).pow(e); }

// Coordinates (a, b); eta-box over the first `plain` of them, and the real
// residual b_i - (a alpha_inf)_i as sheared coordinates.
WeightedBox dirichlet_box(const SMatrix& alpha, const Weights& w,
                          const std::vector<Magnitude>& plain_radius, bool plain_strict,
                          const std::vector<Magnitude>& real_radius, bool real_strict) {
  const auto m = static_cast<std::size_t>(w.m);
  const auto n = static_cast<std::size_t>(w.n);
  std::vector<Magnitude> radius = plain_radius;
  std::vector<bool> strict(plain_radius.size(), plain_strict);
  std::vector<std::vector<RealNumber>> shear;
  if (w.places.has_infinity()) {
    shear.assign(m, std::vector<RealNumber>(n));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < n; ++i) shear[j][i] = -alpha[j][i].at(Place::infinity());
    for (std::size_t i = 0; i < n; ++i) {
      radius.push_back(real_radius[i]);
      strict.push_back(real_strict);
    }
  }
  return WeightedBox(plain_radius.size(), std::move(shear), std::move(radius),
                     std::move(strict));
}

std::size_t eta_coords(const Weights& w) {
  return static_cast<std::size_t>(w.places.has_infinity() ? w.m : w.m + w.n);
}

Magnitude eta_objective(const IntVector& z, const Weights& w) {
  IntVector v(z.begin(), z.begin() + static_cast<long>(eta_coords(w)));
  return eta_norm(v, w.eta);
}

}  // namespace

bool DirichletSolution::verified() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.ok; });
}

std::vector<SNumber> residual_vector(const SMatrix& alpha, const IntVector& a,
                                     const IntVector& b, const Weights& w,
                                     const std::vector<SNumber>* gamma) {
  const auto m = static_cast<std::size_t>(w.m);
  const auto n = static_cast<std::size_t>(w.n);
  if (a.size() != m || b.size() != n) throw ValidationError("(a, b) has the wrong shape");
  std::vector<SNumber> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : w.places.places()) {
      RealNumber v(Rational(-b[i]));
      for (std::size_t j = 0; j < m; ++j)
        if (a[j] != 0) v += alpha[j][i].at(p).scaled(Rational(a[j]));
      if (gamma) v -= (*gamma)[i].at(p);
      out[i].set(p, v);
    }
  }
  return out;
}

IntVector sign_normalized(IntVector z) {
  for (const auto& x : z) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : z) y = -y;
    break;
  }
  return z;
}

std::optional<Magnitude> a_nonzero_threshold(const Weights& w) {
  if (w.places.has_infinity()) return Magnitude(1);
  Magnitude worst(0);
  Integer P = w.places.prime_product();
  for (int i = 0; i < w.n; ++i) {
    Rational sum = 0;
    for (const auto& p : w.places.places()) sum += w.tau_at(i, p);
    Rational gap = sum - w.eta[static_cast<std::size_t>(w.m + i)];
    if (gap <= 0) return std::nullopt;
    worst = max(worst, Magnitude(Rational(P)).pow(1 / gap));
  }
  return worst;
}

std::vector<BoundCheck> verify_homogeneous(const SMatrix& alpha, const IntVector& a,
                                           const IntVector& b, const Integer& H,
                                           const Weights& w, const Limits& limits,
                                           std::vector<std::vector<Magnitude>>* residuals) {
  std::vector<BoundCheck> checks;
  checks.push_back({"nonzero", !(is_zero(a) && is_zero(b))});
  std::vector<SNumber> r = residual_vector(alpha, a, b, w);
  if (residuals) residuals->assign(r.size(), {});
  for (int i = 0; i < w.n; ++i) {
    for (const auto& p : w.places.places()) {
      Magnitude v = place_norm(r[static_cast<std::size_t>(i)], p, limits);
      if (residuals) (*residuals)[static_cast<std::size_t>(i)].push_back(v);
      Magnitude bound = H_pow(H, -w.tau_at(i, p));
      bool ok;
      if (p.is_infinite()) {
        ok = less(v, bound, limits);
      } else {
        ok = less_equal(v, bound * Magnitude(Rational(Integer(static_cast<unsigned long>(p.p())))),
                        limits);
      }
      checks.push_back({"residual[" + std::to_string(i + 1) + "," + p.to_string() + "]", ok});
    }
  }
  for (int j = 0; j < w.m; ++j) {
    bool ok = less_equal(Magnitude(Rational(abs(a[static_cast<std::size_t>(j)]))),
                         H_pow(H, w.eta[static_cast<std::size_t>(j)]), limits);
    checks.push_back({"a[" + std::to_string(j + 1) + "]", ok});
  }
  if (!w.places.has_infinity()) {
    for (int i = 0; i < w.n; ++i) {
      bool ok = less_equal(Magnitude(Rational(abs(b[static_cast<std::size_t>(i)]))),
                           H_pow(H, w.eta[static_cast<std::size_t>(w.m + i)]), limits);
      checks.push_back({"b[" + std::to_string(i + 1) + "]", ok});
    }
  }
  return checks;
}

DirichletSolution solve_homogeneous(const SMatrix& alpha, const Integer& H,
                                    const Weights& w, const Limits& limits) {
  check_alpha_shape(alpha, w);
  if (H < 1) throw ValidationError("H must be a positive integer");
  const auto m = static_cast<std::size_t>(w.m);
  const auto n = static_cast<std::size_t>(w.n);
  CongruenceSystem sys;
  for (const auto& p : w.places.finite()) {
    Magnitude pm(Rational(Integer(static_cast<unsigned long>(p.p()))));
    for (std::size_t i = 0; i < n; ++i) {
      Magnitude bound = pm * H_pow(H, -w.tau_at(static_cast<int>(i), p));
      unsigned long k = valuation_threshold(p.p(), bound, false, limits);
      if (k > 0) sys.push_back(residual_congruence(alpha, p, i, k, -1));
    }
  }
  IntegerLattice lattice = congruences_to_lattice(sys, m + n);
  std::vector<Magnitude> real_radius;
  for (std::size_t i = 0; i < n && w.places.has_infinity(); ++i)
    real_radius.push_back(H_pow(H, -w.tau_at(static_cast<int>(i), Place::infinity())));
  const std::size_t plain = eta_coords(w);
  FamilyAt family = [&](const Magnitude& t, bool strict) {
    std::vector<Magnitude> r;
    for (std::size_t j = 0; j < plain; ++j) r.push_back(t.pow(w.eta[j]));
    return Family{lattice, dirichlet_box(alpha, w, r, strict, real_radius, true)};
  };
  Objective objective = [&](const IntVector& z) { return eta_objective(z, w); };
  auto best = minimize(family, objective, Magnitude(Rational(H)), limits);
  if (!best) throw InternalError("no Dirichlet solution found at H = " + to_string(H));

  DirichletSolution sol;
  sol.a.assign(best->point.begin(), best->point.begin() + static_cast<long>(m));
  sol.b.assign(best->point.begin() + static_cast<long>(m), best->point.end());
  sol.H = H;
  sol.checks = verify_homogeneous(alpha, sol.a, sol.b, H, w, limits, &sol.residuals);
  sol.a_zero = is_zero(sol.a);
  sol.a_nonzero_threshold = a_nonzero_threshold(w);
  if (!sol.verified()) throw InternalError("Dirichlet solution failed re-verification");
  return sol;
}

EpsilonStar epsilon_star(const SMatrix& alpha, const Integer& H, const Weights& w,
                         const Limits& limits) {
  check_alpha_shape(alpha, w);
  if (H < 1) throw ValidationError("H must be a positive integer");
  const auto m = static_cast<std::size_t>(w.m);
  const auto n = static_cast<std::size_t>(w.n);
  const std::size_t plain = eta_coords(w);
  std::vector<Magnitude> eta_radius;
  for (std::size_t j = 0; j < plain; ++j) eta_radius.push_back(H_pow(H, w.eta[j]));
  FamilyAt family = [&](const Magnitude& t, bool strict) {
    CongruenceSystem sys;
    for (const auto& p : w.places.finite()) {
      for (std::size_t i = 0; i < n; ++i) {
        Magnitude bound = t.pow(w.tau_at(static_cast<int>(i), p));
        unsigned long k = valuation_threshold(p.p(), bound, strict, limits);
        if (k > 0) sys.push_back(residual_congruence(alpha, p, i, k, -1));
      }
    }
    std::vector<Magnitude> real_radius;
    for (std::size_t i = 0; i < n && w.places.has_infinity(); ++i)
      real_radius.push_back(t.pow(w.tau_at(static_cast<int>(i), Place::infinity())));
    return Family{congruences_to_lattice(sys, m + n),
                  dirichlet_box(alpha, w, eta_radius, false, real_radius, strict)};
  };
  Objective objective = [&](const IntVector& z) {
    IntVector a(z.begin(), z.begin() + static_cast<long>(m));
    IntVector b(z.begin() + static_cast<long>(m), z.end());
    return tau_norm(residual_vector(alpha, a, b, w), w, limits);
  };
  Magnitude start(make_rational(2, H));
  std::optional<Minimum> best;
  for (int i = 0; i < 256 && !best; ++i) {
    best = minimize(family, objective, start, limits);
    start = start * Magnitude(4);
  }
  if (!best) throw InternalError("empty eta-box at H = " + to_string(H));
  EpsilonStar out;
  out.value = best->value * Magnitude(Rational(H));
  out.a.assign(best->point.begin(), best->point.begin() + static_cast<long>(m));
  out.b.assign(best->point.begin() + static_cast<long>(m), best->point.end());
  out.exact = out.value.rational().has_value();
  return out;
}

std::string to_string(Classification c) {
  return c == Classification::kNonSingularEvidence ? "NonSingularEvidence"
                                                   : "SingularEvidence";
}

std::vector<Integer> dyadic_grid(unsigned first, unsigned last) {
  std::vector<Integer> g;
  for (unsigned k = first; k <= last; ++k) g.push_back(Integer(1) << k);
  return g;
}

SingularityVerdict singularity_scan(const SMatrix& alpha, const std::vector<Integer>& grid,
                                    const Rational& threshold, const Weights& w,
                                    const Limits& limits) {
  if (grid.empty()) throw ValidationError("empty height grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw ValidationError("height grid must be increasing");
  if (threshold < 0) throw ValidationError("threshold must be nonnegative");
  SingularityVerdict v;
  v.threshold = threshold;
  for (const auto& H : grid) {
    EpsilonStar e = epsilon_star(alpha, H, w, limits);
    v.profile.push_back({H, e.value, e.a, e.b, e.exact});
    if (less_equal(Magnitude(threshold), e.value, limits)) v.witness_heights.push_back(H);
  }
  // Dyadic bands of the upper half: floor(log2 H).
  std::vector<std::pair<std::size_t, bool>> bands;
  for (std::size_t i = grid.size() / 2; i < grid.size(); ++i) {
    std::size_t band = mpz_sizeinbase(grid[i].get_mpz_t(), 2);
    bool hit = less_equal(Magnitude(threshold), v.profile[i].eps_star, limits);
    if (bands.empty() || bands.back().first != band)
      bands.emplace_back(band, hit);
    else
      bands.back().second = bands.back().second || hit;
  }
  bool all = std::all_of(bands.begin(), bands.end(), [](const auto& b) { return b.second; });
  v.classification = all ? Classification::kNonSingularEvidence : Classification::kSingularEvidence;
  return v;
}

}  // namespace dioph
