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


#include "twisted/twisted.hpp"

#include <algorithm>
#include <cmath>

namespace dioph {

namespace {

Magnitude pow_of(const Integer& H, const Rational& e) { return Magnitude(Rational(H)).pow(e); }

std::size_t plain_coords(const Weights& w) {
  return static_cast<std::size_t>(w.places.has_infinity() ? w.m : w.m + w.n);
}

bool is_integral_at(const RealNumber& x, const Place& p) {
  if (!x.is_rational()) return false;
  Valuation v = valuation(x.rational_part(), p);
  return v.is_infinite() || v.value() >= 0;
}

// Integer shifts moving the real parts into [0, 1); finite parts must be
// nu-integral already.
IntMatrix normalize_alpha(SMatrix& alpha, const Weights& w, const Limits& limits) {
  IntMatrix shift(alpha.size(), IntVector(static_cast<std::size_t>(w.n), 0));
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    for (std::size_t i = 0; i < alpha[j].size(); ++i) {
      SNumber& x = alpha[j][i];
      for (const auto& p : w.places.finite())
        if (!is_integral_at(x.at(p), p))
          throw ValidationError("alpha must be integral at " + p.to_string());
      if (!w.places.has_infinity()) continue;
      Integer k = x.at(Place::infinity()).floor(limits);
      shift[j][i] = k;
      if (k == 0) continue;
      for (const auto& p : w.places.places()) x.set(p, x.at(p) - RealNumber(Rational(k)));
    }
  }
  return shift;
}

IntVector normalize_gamma(SVector& gamma, const Weights& w, const Limits& limits) {
  if (gamma.size() != static_cast<std::size_t>(w.n))
    throw ValidationError("gamma must have n entries");
  IntVector shift(gamma.size(), 0);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    SNumber& g = gamma[i];
    for (const auto& p : w.places.places())
      if (!g.has(p)) throw ValidationError("gamma lacks a value at place " + p.to_string());
    for (const auto& p : w.places.finite())
      if (!is_integral_at(g.at(p), p))
        throw ValidationError("gamma must be integral at " + p.to_string());
    if (!w.places.has_infinity()) continue;
    Integer k = g.at(Place::infinity()).floor(limits);
    shift[i] = k;
    if (k == 0) continue;
    for (const auto& p : w.places.places()) g.set(p, g.at(p) - RealNumber(Rational(k)));
  }
  return shift;
}

// K_H in coordinates (a, b) for the form a alpha + b.
WeightedBox body(const SMatrix& alpha, const Rational& eps, const Integer& H, const Weights& w,
                 bool closed) {
  const auto m = static_cast<std::size_t>(w.m);
  const auto n = static_cast<std::size_t>(w.n);
  const std::size_t plain = plain_coords(w);
  std::vector<Magnitude> radius;
  for (std::size_t k = 0; k < plain; ++k) radius.push_back(pow_of(H, w.eta[k]));
  std::vector<bool> strict(plain, false);
  if (!w.places.has_infinity()) return WeightedBox(std::move(radius), std::move(strict));
  std::vector<std::vector<RealNumber>> shear(m, std::vector<RealNumber>(n));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) shear[j][i] = alpha[j][i].at(Place::infinity());
  Magnitude base(eps / Rational(H));
  for (std::size_t i = 0; i < n; ++i) {
    radius.push_back(base.pow(w.tau_at(static_cast<int>(i), Place::infinity())));
    strict.push_back(!closed);
  }
  return WeightedBox(plain, std::move(shear), std::move(radius), std::move(strict));
}

void check_eps(const Rational& eps) {
  if (eps <= 0 || eps > 1) throw ValidationError("epsilon must lie in (0, 1]");
}

Magnitude sum_norms(const std::vector<SNumber>& res, const Weights& w, bool finite,
                    const Limits& limits) {
  Magnitude best;
  for (std::size_t i = 0; i < res.size(); ++i) {
    for (const auto& p : w.places.places()) {
      if (p.is_finite() != finite) continue;
      Magnitude v = place_norm(res[i], p, limits);
      if (v.is_zero()) continue;
      best = max(best, v.pow(1 / w.tau_at(static_cast<int>(i), p)), limits);
    }
  }
  return best;
}

const Magnitude* find_constant(const std::vector<NamedConstant>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return &c.value;
  return nullptr;
}

}  // namespace

std::string to_string(TwistedMode mode) {
  switch (mode) {
    case TwistedMode::kReal:
      return "real";
    case TwistedMode::kFinite:
      return "finite";
    case TwistedMode::kInfinite:
      return "infinite";
  }
  return "?";
}

TwistedMode twisted_mode(const Weights& w) {
  if (!w.places.has_infinity()) return TwistedMode::kFinite;
  return w.places.finite().empty() ? TwistedMode::kReal : TwistedMode::kInfinite;
}

FlowLattice::FlowLattice(RealMatrix alpha, Integer H, WeightsReal w)
    : alpha_(std::move(alpha)), H_(std::move(H)), w_(std::move(w)) {
  auto report = validate_weights(w_);
  if (!report.ok) throw ValidationError(report.to_string());
  if (H_ < 1) throw ValidationError("H must be a positive integer");
  if (alpha_.size() != w_.eta.size()) throw ValidationError("alpha must have m rows");
  for (const auto& row : alpha_)
    if (row.size() != w_.tau.size()) throw ValidationError("alpha must have n columns");
}

double FlowLattice::t() const { return std::log(H_.get_d()); }

WeightedBox FlowLattice::ball(const Magnitude& R) const {
  const std::size_t m = w_.eta.size();
  const std::size_t n = w_.tau.size();
  std::vector<Magnitude> radius;
  for (std::size_t j = 0; j < m; ++j) radius.push_back(R * pow_of(H_, w_.eta[j]));
  for (std::size_t i = 0; i < n; ++i) radius.push_back(R * pow_of(H_, -w_.tau[i]));
  std::vector<std::vector<RealNumber>> shear(m, std::vector<RealNumber>(n));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) shear[j][i] = -alpha_[j][i];
  return WeightedBox(m, std::move(shear), std::move(radius), std::vector<bool>(m + n, false));
}

std::vector<RealInterval> FlowLattice::image(const IntVector& a, const IntVector& b,
                                             unsigned bits) const {
  const std::size_t m = w_.eta.size();
  const std::size_t n = w_.tau.size();
  if (a.size() != m || b.size() != n) throw ValidationError("(a, b) has the wrong shape");
  std::vector<RealInterval> out;
  for (std::size_t i = 0; i < n; ++i) {
    RealNumber v(Rational(-b[i]));
    for (std::size_t j = 0; j < m; ++j) v += alpha_[j][i].scaled(Rational(a[j]));
    out.push_back(v.enclose(bits) * pow_of(H_, w_.tau[i]).enclose(bits));
  }
  for (std::size_t j = 0; j < m; ++j)
    out.push_back(pow_of(H_, -w_.eta[j]).enclose(bits).scaled(Rational(a[j])));
  return out;
}

Integer round_nonzero(const RealNumber& x, const Limits& limits) {
  Integer y = (x + RealNumber(make_rational(1, 2))).floor(limits);
  if (y != 0) return y;
  return x.sign(limits) < 0 ? Integer(-1) : Integer(1);
}

bool TwistedCertificate::verified() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.ok; });
}

SMatrix real_matrix_to_s(const RealMatrix& alpha) {
  SMatrix out(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (const auto& x : alpha[j]) {
      SNumber s;
      s.set(Place::infinity(), x);
      out[j].push_back(s);
    }
  return out;
}

SVector real_vector_to_s(const RealVector& gamma) {
  SVector out;
  for (const auto& x : gamma) {
    SNumber s;
    s.set(Place::infinity(), x);
    out.push_back(s);
  }
  return out;
}

bool is_witness(const SMatrix& alpha, const Rational& eps, const Integer& H, const Weights& w,
                const Limits& limits) {
  check_alpha_shape(alpha, w);
  check_eps(eps);
  if (H < 1) throw ValidationError("H must be a positive integer");
  SMatrix a = alpha;
  normalize_alpha(a, w, limits);
  return !has_nonzero_point(gamma_lattice(a, eps, H, w, limits), body(a, eps, H, w, false),
                            limits);
}

std::vector<Integer> find_witness_heights(const SMatrix& alpha, const Rational& eps,
                                          const std::vector<Integer>& candidates,
                                          const Weights& w, const Limits& limits) {
  std::vector<Integer> out;
  for (const auto& H : candidates)
    if (is_witness(alpha, eps, H, w, limits)) out.push_back(H);
  return out;
}

std::vector<Integer> geometric_heights(const Integer& start, const Rational& factor,
                                       const Integer& stop) {
  if (start < 1 || factor <= 1) throw ValidationError("need start >= 1 and factor > 1");
  std::vector<Integer> out;
  for (Rational h(start); h <= Rational(stop); h *= factor) {
    Integer H = ceil_of(h);
    if (H > stop) break;
    if (out.empty() || out.back() != H) out.push_back(H);
  }
  return out;
}

Rational default_epsilon(const SMatrix& alpha, const std::vector<Integer>& candidates,
                         const Weights& w, unsigned bits, const Limits& limits) {
  auto any = [&](const Rational& eps) {
    return std::any_of(candidates.begin(), candidates.end(),
                       [&](const Integer& H) { return is_witness(alpha, eps, H, w, limits); });
  };
  if (any(1)) return 1;
  Rational lo = 0;
  Rational hi = 1;
  for (unsigned k = 0; k < bits; ++k) {
    Rational mid = (lo + hi) / 2;
    if (any(mid))
      lo = mid;
    else
      hi = mid;
  }
  if (lo == 0) throw ValidationError("no witness height among the candidates");
  return lo;
}

std::vector<NamedConstant> twisted_constants(const Rational& eps, const Integer& H,
                                             const Weights& w, const Rational& pad) {
  const TwistedMode mode = twisted_mode(w);
  const auto m = static_cast<std::size_t>(w.m);
  const auto n = static_cast<std::size_t>(w.n);
  const Magnitude d(static_cast<long>(m + n));
  const Rational ratio = Rational(H) / eps;

  // Index of Gamma over its volume floor: lambda_d <= det / (Vol(K_H) / 2^d).
  Magnitude det(1);
  const std::size_t cover = plain_coords(w);
  for (const auto& p : w.places.finite()) {
    Magnitude nu(Rational(static_cast<unsigned long>(p.p())));
    det = det * nu.pow(static_cast<long>(cover));
    for (std::size_t i = 0; i < n; ++i)
      det = det * nu * Magnitude(ratio).pow(w.tau_at(static_cast<int>(i), p));
  }
  Magnitude half_volume(1);
  for (std::size_t k = 0; k < cover; ++k) half_volume = half_volume * pow_of(H, w.eta[k]);
  if (w.places.has_infinity())
    for (std::size_t i = 0; i < n; ++i)
      half_volume = half_volume *
                    Magnitude(1 / ratio).pow(w.tau_at(static_cast<int>(i), Place::infinity()));
  Magnitude lambda = det / half_volume;
  Magnitude P(Rational(w.places.prime_product()));

  std::vector<NamedConstant> out{{"lambda_bound", lambda}};
  if (mode == TwistedMode::kFinite) {
    out.push_back({"residual", Magnitude(eps)});
    out.push_back({"size", Magnitude(3) * P * d * lambda});
    return out;
  }
  Rational tau_min = w.tau_at(0, Place::infinity());
  for (int i = 1; i < w.n; ++i) tau_min = std::min(tau_min, w.tau_at(i, Place::infinity()));
  Magnitude size = d * P * lambda;
  if (mode == TwistedMode::kInfinite) {
    out.push_back({"residual_finite", Magnitude(eps)});
    out.push_back({"residual_real", size.pow(1 / tau_min) * Magnitude(eps)});
    out.push_back({"size", size});
    out.push_back({"pad", Magnitude(pad)});
    return out;
  }
  Magnitude eta(0);
  for (const auto& e : w.eta) eta = max(eta, size.pow(1 / e));
  out.push_back({"residual", size.pow(1 / tau_min) * Magnitude(eps)});
  out.push_back({"size", size});
  out.push_back({"eta", eta});
  return out;
}

TwistedSetup prepare_twisted(const SMatrix& alpha, const Rational& eps, const Integer& H,
                             const Weights& w, const Limits& limits) {
  check_alpha_shape(alpha, w);
  check_eps(eps);
  if (H < 1) throw ValidationError("H must be a positive integer");
  TwistedSetup s;
  s.mode = twisted_mode(w);
  s.w = w;
  s.alpha = alpha;
  s.alpha_shift = normalize_alpha(s.alpha, w, limits);
  s.eps = eps;
  s.H = H;
  s.lattice = gamma_lattice(s.alpha, eps, H, w, limits);
  if (has_nonzero_point(s.lattice, body(s.alpha, eps, H, w, false), limits))
    throw ValidationError("H = " + to_string(H) + " is not a witness height");
  s.body = body(s.alpha, eps, H, w, true);
  MinimaReport minima = successive_minima(s.lattice, s.body, limits);
  s.basis = minima.witnesses;
  s.lambda = minima.lambda;
  s.lambda_bound = twisted_constants(eps, H, w, 0).front().value;
  auto inv = inverse(to_rational(s.basis));
  if (!inv) throw InternalError("minima witnesses are dependent");
  s.inverse = *inv;

  const auto m = static_cast<std::size_t>(w.m);
  const auto n = static_cast<std::size_t>(w.n);
  if (s.mode == TwistedMode::kFinite) {
    for (const auto& v : s.basis) {
      std::optional<std::size_t> hit;
      for (std::size_t i = 0; i < n && !hit; ++i)
        if (less(pow_of(H, w.eta[m + i]), Magnitude(abs_of(Rational(v[m + i]))), limits))
          hit = m + i;
      for (std::size_t j = 0; j < m && !hit; ++j)
        if (less(pow_of(H, w.eta[j]), Magnitude(abs_of(Rational(v[j]))), limits)) hit = j;
      if (!hit) throw InternalError("basis vector inside K_H at a witness height");
      s.exceed.push_back(*hit);
    }
  } else if (s.mode == TwistedMode::kInfinite) {
    Integer total = 0;
    for (const auto& v : s.basis) total += abs(v[0]);
    s.pad = Rational(pow_of(H, w.eta[0]).ceil()) + Rational(w.places.prime_product() * total);
  }
  return s;
}

TwistedCertificate construct_twisted(const TwistedSetup& s, const SVector& gamma_in,
                                     const Limits& limits) {
  const Weights& w = s.w;
  const auto m = static_cast<std::size_t>(w.m);
  const auto n = static_cast<std::size_t>(w.n);
  const std::size_t d = m + n;
  SVector gamma = gamma_in;
  TwistedCertificate cert;
  cert.H = s.H;
  cert.eps = s.eps;
  cert.trace.mode = s.mode;
  cert.trace.basis = s.basis;
  cert.trace.lambda = s.lambda;
  cert.trace.exceed = s.exceed;
  cert.trace.pad = s.pad;
  cert.trace.alpha_shift = s.alpha_shift;
  cert.trace.gamma_shift = normalize_gamma(gamma, w, limits);

  // x solves x B = target B-coordinates; target is (u, gamma - u alpha) with
  // u = (D, 0, ..., 0) at infinity in kInfinite and u = 0 otherwise.
  std::vector<SNumber> x(d);
  for (const auto& p : w.places.places()) {
    std::vector<RealNumber> target(d);
    for (std::size_t i = 0; i < n; ++i) target[m + i] = gamma[i].at(p);
    if (s.mode == TwistedMode::kInfinite && p.is_infinite()) {
      target[0] = RealNumber(s.pad);
      for (std::size_t i = 0; i < n; ++i)
        target[m + i] -= s.alpha[0][i].at(p).scaled(s.pad);
    }
    for (std::size_t l = 0; l < d; ++l) {
      RealNumber acc;
      for (std::size_t k = 0; k < d; ++k)
        if (s.inverse[k][l] != 0) acc += target[k].scaled(s.inverse[k][l]);
      x[l].set(p, acc);
    }
  }

  const Rational P(w.places.prime_product());
  std::vector<Rational> r(d);
  for (std::size_t l = 0; l < d; ++l) {
    if (s.mode == TwistedMode::kReal) {
      r[l] = Rational(round_nonzero(x[l].at(Place::infinity()), limits));
      cert.trace.windows.push_back("nearest nonzero integer");
      continue;
    }
    std::map<Place, Rational> targets;
    for (const auto& p : w.places.finite()) targets[p] = x[l].rational_at(p);
    ApproxWindow window = s.mode == TwistedMode::kFinite
                              ? (s.basis[l][s.exceed[0]] > 0 ? ApproxWindow::positive(P)
                                                            : ApproxWindow::negative(P))
                              : ApproxWindow::proximity(x[l].at(Place::infinity()), P);
    r[l] = strong_approx(targets, window, limits);
    cert.trace.windows.push_back(window.to_string());
  }
  cert.trace.x = x;
  cert.trace.r = r;

  std::vector<Rational> z(d, 0);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t k = 0; k < d; ++k) z[k] += r[l] * Rational(s.basis[l][k]);
  for (const auto& v : z)
    if (v.get_den() != 1) throw InternalError("twisted combination is not integral");
  cert.a.resize(m);
  cert.b.resize(n);
  for (std::size_t j = 0; j < m; ++j) cert.a[j] = z[j].get_num();
  // Undo the sign of the internal form and the normalizing shifts.
  for (std::size_t i = 0; i < n; ++i) {
    Integer b = -z[m + i].get_num();
    for (std::size_t j = 0; j < m; ++j) b += cert.a[j] * s.alpha_shift[j][i];
    cert.b[i] = b - cert.trace.gamma_shift[i];
  }
  cert.constants = twisted_constants(s.eps, s.H, w, s.pad);

  SMatrix alpha = s.alpha;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& p : w.places.places())
        alpha[j][i].set(p, alpha[j][i].at(p) + RealNumber(Rational(s.alpha_shift[j][i])));
  cert.checks = verify_twisted(alpha, gamma_in, w, cert, limits);
  cert.checks.push_back({"last_minimum", less_equal(s.lambda.back(), s.lambda_bound, limits)});
  return cert;
}

std::vector<BoundCheck> verify_twisted(const SMatrix& alpha, const SVector& gamma,
                                       const Weights& w, TwistedCertificate& cert,
                                       const Limits& limits) {
  check_alpha_shape(alpha, w);
  const TwistedMode mode = twisted_mode(w);
  const auto m = static_cast<std::size_t>(w.m);
  const auto n = static_cast<std::size_t>(w.n);
  std::vector<BoundCheck> checks;
  auto expected = twisted_constants(cert.eps, cert.H, w, cert.trace.pad);
  bool same = expected.size() == cert.constants.size();
  for (std::size_t k = 0; same && k < expected.size(); ++k)
    same = expected[k].name == cert.constants[k].name &&
           compare(expected[k].value, cert.constants[k].value, limits) == 0;
  checks.push_back({"constants", same});
  if (!same) return checks;
  auto c = [&](const std::string& name) { return *find_constant(expected, name); };

  auto res = residual_vector(alpha, cert.a, cert.b, w, &gamma);
  cert.residual_finite = sum_norms(res, w, true, limits);
  cert.residual_real = sum_norms(res, w, false, limits);
  const Magnitude Hinv = Magnitude(Rational(cert.H)).inverse();
  checks.push_back({"nonzero", !is_zero(cert.a) || !is_zero(cert.b)});


  if (mode == TwistedMode::kFinite) {
    checks.push_back({"residual", less_equal(cert.residual_finite, c("residual") * Hinv, limits)});
    for (std::size_t j = 0; j < m; ++j)
      checks.push_back({"a[" + std::to_string(j) + "]",
                        less_equal(Magnitude(abs_of(Rational(cert.a[j]))),
                                   c("size") * pow_of(cert.H, w.eta[j]), limits)});
    for (std::size_t i = 0; i < n; ++i)
      checks.push_back({"b[" + std::to_string(i) + "]",
                        less_equal(Magnitude(abs_of(Rational(cert.b[i]))),
                                   c("size") * pow_of(cert.H, w.eta[m + i]), limits)});
    return checks;
  }
  if (mode == TwistedMode::kInfinite) {
    checks.push_back({"residual_finite",
                      less_equal(cert.residual_finite, c("residual_finite") * Hinv, limits)});
    checks.push_back(
        {"residual_real", less_equal(cert.residual_real, c("residual_real") * Hinv, limits)});
    checks.push_back({"a1_lower", less_equal(pow_of(cert.H, w.eta[0]),
                                             Magnitude(abs_of(Rational(cert.a[0]))), limits)});
    // |a_1| <= size H^{eta_1} + D, i.e. |a_1| - D <= size H^{eta_1}.
    Rational excess = abs_of(Rational(cert.a[0])) - cert.trace.pad;
    checks.push_back({"a[0]", excess <= 0 || less_equal(Magnitude(excess),
                                                        c("size") * pow_of(cert.H, w.eta[0]),
                                                        limits)});
    for (std::size_t j = 1; j < m; ++j)
      checks.push_back({"a[" + std::to_string(j) + "]",
                        less_equal(Magnitude(abs_of(Rational(cert.a[j]))),
                                   c("size") * pow_of(cert.H, w.eta[j]), limits)});
    return checks;
  }
  checks.push_back({"residual", less_equal(cert.residual_real, c("residual") * Hinv, limits)});
  for (std::size_t j = 0; j < m; ++j)
    checks.push_back({"a[" + std::to_string(j) + "]",
                      less_equal(Magnitude(abs_of(Rational(cert.a[j]))),
                                 c("size") * pow_of(cert.H, w.eta[j]), limits)});
  checks.push_back(
      {"eta", less_equal(eta_norm(cert.a, w.eta), c("eta") * Magnitude(Rational(cert.H)), limits)});
  return checks;
}

TwistedSolver::TwistedSolver(SMatrix alpha, Rational eps, Weights w, Limits limits)
    : alpha_(std::move(alpha)), eps_(std::move(eps)), w_(std::move(w)), limits_(limits) {
  check_alpha_shape(alpha_, w_);
  check_eps(eps_);
}

const TwistedSetup* TwistedSolver::setup(const Integer& H) {
  auto it = cache_.find(H);
  if (it == cache_.end()) {
    std::optional<TwistedSetup> s;
    if (is_witness(alpha_, eps_, H, w_, limits_)) s = prepare_twisted(alpha_, eps_, H, w_, limits_);
    it = cache_.emplace(H, std::move(s)).first;
  }
  return it->second ? &*it->second : nullptr;
}

TwistedCertificate TwistedSolver::construct(const Integer& H, const SVector& gamma) {
  const TwistedSetup* s = setup(H);
  if (!s) throw ValidationError("H = " + to_string(H) + " is not a witness height");
  return construct_twisted(*s, gamma, limits_);
}

std::vector<TwistedCertificate> TwistedSolver::distinct_sequence(
    const SVector& gamma, const std::vector<Integer>& candidates, std::size_t count) {
  const TwistedMode mode = twisted_mode(w_);
  std::vector<TwistedCertificate> out;
  std::optional<Rational> a1_top;   // largest certified |a_1| so far
  std::optional<Magnitude> floor_;  // smallest residual so far
  for (const auto& H : candidates) {
    if (out.size() >= count) break;
    if (!out.empty() && H <= out.back().H) continue;
    if (mode == TwistedMode::kInfinite) {
      if (a1_top && !less(Magnitude(*a1_top), pow_of(H, w_.eta[0]), limits_)) continue;
    } else if (floor_) {
      if (floor_->is_zero()) break;
      Magnitude bound = *find_constant(twisted_constants(eps_, H, w_, 0), "residual") /
                        Magnitude(Rational(H));
      if (!less(bound, *floor_, limits_)) continue;
    }
    const TwistedSetup* s = setup(H);
    if (!s) continue;
    TwistedCertificate c = construct_twisted(*s, gamma, limits_);
    if (mode == TwistedMode::kInfinite) {
      Rational top =
          (*find_constant(c.constants, "size") * pow_of(H, w_.eta[0])).upper_rational() +
          s->pad;
      a1_top = a1_top ? std::max(*a1_top, top) : top;
    } else {
      const Magnitude& r = mode == TwistedMode::kReal ? c.residual_real : c.residual_finite;
      floor_ = floor_ ? min(*floor_, r, limits_) : r;
    }
    out.push_back(std::move(c));
  }
  return out;
}

TwistedCertificate construct_real(const RealMatrix& alpha, const RealVector& gamma,
                                  const Rational& eps, const Integer& H, const WeightsReal& w,
                                  const Limits& limits) {
  Weights sw = w.to_weights();
  return construct_twisted(prepare_twisted(real_matrix_to_s(alpha), eps, H, sw, limits),
                           real_vector_to_s(gamma), limits);
}

TwistedCertificate construct_s_finite(const SMatrix& alpha, const SVector& gamma,
                                      const Rational& eps, const Integer& H, const Weights& w,
                                      const Limits& limits) {
  if (w.places.has_infinity()) throw ValidationError("construct_s_finite needs inf outside S");
  return construct_twisted(prepare_twisted(alpha, eps, H, w, limits), gamma, limits);
}

TwistedCertificate construct_s_infinite(const SMatrix& alpha, const SVector& gamma,
                                        const Rational& eps, const Integer& H, const Weights& w,
                                        const Limits& limits) {
  if (!w.places.has_infinity()) throw ValidationError("construct_s_infinite needs inf in S");
  if (w.places.finite().empty()) {
    check_alpha_shape(alpha, w);
    RealMatrix ra(alpha.size());
    for (std::size_t j = 0; j < alpha.size(); ++j)
      for (const auto& x : alpha[j]) ra[j].push_back(x.at(Place::infinity()));
    RealVector rg;
    for (const auto& g : gamma) rg.push_back(g.at(Place::infinity()));
    WeightsReal wr;
    for (int i = 0; i < w.n; ++i) wr.tau.push_back(w.tau_at(i, Place::infinity()));
    wr.eta = w.eta;
    return construct_real(ra, rg, eps, H, wr, limits);
  }
  return construct_twisted(prepare_twisted(alpha, eps, H, w, limits), gamma, limits);
}

}  // namespace dioph
