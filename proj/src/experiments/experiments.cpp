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


#include "experiments/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

namespace dioph {

namespace {

void check_gamma_shape(const std::vector<SNumber>& gamma, const Weights& w) {
  if (gamma.size() != static_cast<std::size_t>(w.n))
    throw ValidationError("gamma has " + std::to_string(gamma.size()) +
                          " entries, expected n=" + std::to_string(w.n));
  for (const auto& g : gamma)
    for (const auto& p : w.places.places())
      if (!g.has(p)) throw ValidationError("gamma has no value at " + p.to_string());
}

IntVector concat(const IntVector& a, const IntVector& b) {
  IntVector z = a;
  z.insert(z.end(), b.begin(), b.end());
  return z;
}

// |(a alpha)_i - b - gamma_i|_tau over the places of one row.
Magnitude row_value(const SMatrix& alpha, const IntVector& a,
                    const std::vector<SNumber>& gamma, const Weights& w, std::size_t i,
                    const Integer& b, const Limits& limits) {
  Magnitude best;
  for (const auto& p : w.places.places()) {
    RealNumber v(Rational(-b));
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] != 0) v += alpha[j][i].at(p).scaled(Rational(a[j]));
    v -= gamma[i].at(p);
    SNumber x;
    x.set(p, v);
    Magnitude t = place_norm(x, p, limits).pow(1 / w.tau_at(static_cast<int>(i), p));
    best = max(best, t, limits);
  }
  return best;
}

struct Bounds {
  std::vector<IntVector> per_level;  // per_level[k][j] = floor(A_k^{eta_j})
};

Bounds eta_bounds(const std::vector<Integer>& grid, const std::vector<Rational>& eta,
                  const Limits& limits) {
  Bounds out;
  for (const auto& A : grid) {
    IntVector row;
    for (const auto& e : eta)
      row.push_back(Magnitude::power(RealNumber(Rational(A)), e, limits).floor(limits));
    out.per_level.push_back(std::move(row));
  }
  return out;
}

// Points of the box minus the origin.
Integer box_count(const IntVector& bound) {
  Integer c = 1;
  for (const auto& r : bound) c *= 2 * r + 1;
  return c - 1;
}

// Mixed-radix decoding of an index into [-r_j, r_j]^d.
IntVector decode(std::size_t index, const std::vector<long>& radius) {
  IntVector z(radius.size());
  for (std::size_t j = 0; j < radius.size(); ++j) {
    auto width = static_cast<std::size_t>(2 * radius[j] + 1);
    z[j] = static_cast<long>(index % width) - radius[j];
    index /= width;
  }
  return z;
}

std::size_t level_of(const IntVector& z, const Bounds& b, std::size_t levels) {
  for (std::size_t k = 0; k < levels; ++k) {
    bool inside = true;
    for (std::size_t j = 0; j < z.size() && inside; ++j)
      inside = abs(z[j]) <= b.per_level[k][j];
    if (inside) return k;
  }
  return levels;
}

struct Exact {
  Magnitude value;
  IntVector a;
  IntVector b;
};

Exact exact_value(const SMatrix& alpha, const std::vector<SNumber>& gamma,
                  const Weights& w, const IntVector& z, const Limits& limits) {
  Exact e;
  auto m = static_cast<std::size_t>(w.m);
  if (w.places.has_infinity()) {
    e.a = z;
    Magnitude r = min_residual_over_b(alpha, e.a, gamma, w, &e.b, limits);
    e.value = eta_norm(z, w.eta) * r;
  } else {
    e.a.assign(z.begin(), z.begin() + static_cast<long>(m));
    e.b.assign(z.begin() + static_cast<long>(m), z.end());
    e.value = eta_norm(z, w.eta) * tau_norm(residual_vector(alpha, e.a, e.b, w, &gamma), w, limits);
  }
  return e;
}

void finish_prefix(LiminfRecord& rec, std::vector<std::optional<Exact>>& best,
                   const Limits& limits) {
  std::optional<Exact> running;
  for (auto& b : best) {
    if (b && (!running || less(b->value, running->value, limits))) running = b;
    if (!running) throw InternalError("empty liminf level");
    rec.stat.push_back(running->value);
    rec.arg_a.push_back(running->a);
    rec.arg_b.push_back(running->b);
  }
}

// Real places only: a long double pass brackets every value, then the few
// points whose lower bound reaches the best upper bound are evaluated exactly.
void liminf_real(const SMatrix& alpha, const std::vector<SNumber>& gamma, const Weights& w,
                 const Bounds& bounds, std::size_t levels, LiminfRecord& rec,
                 const Limits& limits) {
  auto m = static_cast<std::size_t>(w.m);
  auto n = static_cast<std::size_t>(w.n);
  const Place inf = Place::infinity();
  std::vector<std::vector<long double>> al(m, std::vector<long double>(n));
  std::vector<long double> gl(n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) al[j][i] = alpha[j][i].at(inf).approx();
  for (std::size_t i = 0; i < n; ++i) gl[i] = gamma[i].at(inf).approx();
  std::vector<long double> inv_tau(n), inv_eta(m);
  for (std::size_t i = 0; i < n; ++i) inv_tau[i] = 1.0L / w.tau[i][0].get_d();
  for (std::size_t j = 0; j < m; ++j) inv_eta[j] = 1.0L / w.eta[j].get_d();

  std::vector<long> radius(m);
  std::size_t total = 1;
  for (std::size_t j = 0; j < m; ++j) {
    radius[j] = bounds.per_level[levels - 1][j].get_si();
    total *= static_cast<std::size_t>(2 * radius[j] + 1);
  }
  const long double kSlack = 1e-15L;
  auto powr = [](long double x, long double e) { return e == 1.0L ? x : powl(x, e); };

  std::vector<long double> lo(total), hi(total);
  std::vector<std::size_t> level(total, levels);
  std::vector<long double> min_hi(levels, INFINITY);
  for (std::size_t idx = 0; idx < total; ++idx) {
    IntVector z = decode(idx, radius);
    if (is_zero(z)) continue;
    level[idx] = level_of(z, bounds, levels);
    long double nlo = 0, nhi = 0;
    for (std::size_t j = 0; j < m; ++j) {
      long double v = powr(std::fabs(static_cast<long double>(z[j].get_si())), inv_eta[j]);
      nlo = std::max(nlo, v);
    }
    nhi = nlo * (1 + kSlack);
    nlo *= (1 - kSlack);
    long double rlo = 0, rhi = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double x = -gl[i], scale = std::fabs(gl[i]) + 1;
      for (std::size_t j = 0; j < m; ++j) {
        long double aj = static_cast<long double>(z[j].get_si());
        x += aj * al[j][i];
        scale += std::fabs(aj * al[j][i]);
      }
      long double err = scale * 0x1p-48L;
      long double d = std::fabs(x - nearbyintl(x));
      rlo = std::max(rlo, powr(std::max(0.0L, d - err), inv_tau[i]));
      rhi = std::max(rhi, powr(d + err, inv_tau[i]));
    }
    lo[idx] = nlo * rlo * (1 - kSlack);
    hi[idx] = nhi * rhi * (1 + kSlack);
    min_hi[level[idx]] = std::min(min_hi[level[idx]], hi[idx]);
  }
  for (std::size_t k = 1; k < levels; ++k) min_hi[k] = std::min(min_hi[k], min_hi[k - 1]);

  std::map<std::size_t, Exact> cache;
  auto exact_at = [&](std::size_t idx) -> const Exact& {
    auto it = cache.find(idx);
    if (it == cache.end())
      it = cache.emplace(idx, exact_value(alpha, gamma, w, decode(idx, radius), limits)).first;
    return it->second;
  };
  std::vector<std::optional<Exact>> best(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    std::vector<std::size_t> cand;
    for (std::size_t idx = 0; idx < total; ++idx)
      if (level[idx] <= k && lo[idx] <= min_hi[k]) cand.push_back(idx);
    std::sort(cand.begin(), cand.end(), [&](std::size_t x, std::size_t y) {
      return lo[x] != lo[y] ? lo[x] < lo[y] : x < y;
    });
    std::optional<std::size_t> arg;
    for (std::size_t idx : cand) {
      if (arg && (lo[idx] > hi[*arg] || exact_at(*arg).value.is_zero())) break;
      if (!arg || less(exact_at(idx).value, exact_at(*arg).value, limits)) arg = idx;
    }
    if (!arg) throw InternalError("liminf bracket lost every candidate");
    best[k] = exact_at(*arg);
  }
  // best[k] already covers all levels <= k.
  for (std::size_t k = 0; k < levels; ++k) {
    rec.stat.push_back(best[k]->value);
    rec.arg_a.push_back(best[k]->a);
    rec.arg_b.push_back(best[k]->b);
  }
}

void liminf_exact(const SMatrix& alpha, const std::vector<SNumber>& gamma, const Weights& w,
                  const Bounds& bounds, std::size_t levels, LiminfRecord& rec,
                  const Limits& limits) {
  const IntVector& top = bounds.per_level[levels - 1];
  std::vector<long> radius;
  std::size_t total = 1;
  for (const auto& r : top) {
    radius.push_back(r.get_si());
    total *= static_cast<std::size_t>(2 * radius.back() + 1);
  }
  std::vector<std::optional<Exact>> best(levels);
  for (std::size_t idx = 0; idx < total; ++idx) {
    IntVector z = decode(idx, radius);
    if (is_zero(z)) continue;
    std::size_t k = level_of(z, bounds, levels);
    Exact e = exact_value(alpha, gamma, w, z, limits);
    if (!best[k] || less(e.value, best[k]->value, limits)) best[k] = std::move(e);
  }
  finish_prefix(rec, best, limits);
}

}  // namespace

std::vector<SNumber> sample_gamma(SplitRng& rng, const PlaceSet& places, int n,
                                  unsigned precision) {
  if (precision < 1) throw ValidationError("sampling precision must be at least 1");
  if (n < 1) throw ValidationError("gamma dimension must be at least 1");
  std::vector<SNumber> out(static_cast<std::size_t>(n));
  for (auto& g : out) {
    for (const auto& p : places.places()) {
      if (p.is_finite()) {
        g.set(p, Rational(rng.below(ipow(Integer(p.p()), precision))));
      } else {
        Integer k = rng.bits(precision);
        g.set(p, make_rational(k, Integer(1) << precision));
      }
    }
  }
  return out;
}

std::vector<SNumber> sample_gamma(std::uint64_t seed, const PlaceSet& places, int n,
                                  unsigned precision) {
  SplitRng rng(seed);
  return sample_gamma(rng, places, n, precision);
}

Magnitude min_residual_over_b(const SMatrix& alpha, const IntVector& a,
                              const std::vector<SNumber>& gamma, const Weights& w,
                              IntVector* b_out, const Limits& limits) {
  if (!w.places.has_infinity())
    throw ValidationError("minimizing over b needs infinity in S");
  const Place inf = Place::infinity();
  auto n = static_cast<std::size_t>(w.n);
  Magnitude total;
  IntVector bs(n);
  for (std::size_t i = 0; i < n; ++i) {
    RealNumber x = -gamma[i].at(inf);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] != 0) x += alpha[j][i].at(inf).scaled(Rational(a[j]));
    // The nearest integer b0 has value at most max(1, L), where L bounds the
    // finite part from below for every b. Anything better lies within 1 of x.
    Integer b0 = (x + RealNumber(Rational(1, 2))).floor(limits);
    Integer f = x.floor(limits);
    std::optional<Magnitude> row;
    Integer arg = b0;
    for (const Integer& b : {b0, Integer(f - 1), f, Integer(f + 1), Integer(f + 2)}) {
      Magnitude v = row_value(alpha, a, gamma, w, i, b, limits);
      if (!row || less(v, *row, limits)) {
        row = v;
        arg = b;
      }
    }
    bs[i] = arg;
    total = max(total, *row, limits);
  }
  if (b_out) *b_out = bs;
  return total;
}

bool target_membership(const SMatrix& alpha, const std::vector<SNumber>& gamma,
                       const TargetQuery& q, const Weights& w, const Limits& limits) {
  check_alpha_shape(alpha, w);
  check_gamma_shape(gamma, w);
  if (q.a.size() != static_cast<std::size_t>(w.m))
    throw ValidationError("query a has the wrong length");
  if (q.delta < 0) throw ValidationError("delta must be nonnegative");
  IntVector neg_a = q.a;
  for (auto& x : neg_a) x = -x;
  // a alpha + b + gamma = -((-a) alpha - b - gamma)
  Magnitude residual;
  Magnitude phi;
  if (w.places.has_infinity()) {
    if (q.b) throw ValidationError("b must be absent when infinity is in S");
    residual = min_residual_over_b(alpha, neg_a, gamma, w, nullptr, limits);
    phi = eta_norm(q.a, w.eta);
  } else {
    if (!q.b || q.b->size() != static_cast<std::size_t>(w.n))
      throw ValidationError("b of length n is required when infinity is not in S");
    residual = tau_norm(residual_vector(alpha, neg_a, *q.b, w, &gamma), w, limits);
    phi = eta_norm(concat(q.a, *q.b), w.eta);
  }
  if (phi.is_zero()) throw ValidationError("phi(a, b) is zero");
  return less_equal(phi * residual, Magnitude(q.delta), limits);
}

bool LiminfRecord::monotone(const Limits& limits) const {
  for (std::size_t k = 1; k < stat.size(); ++k)
    if (less(stat[k - 1], stat[k], limits)) return false;
  return true;
}

LiminfRecord liminf_statistic(const SMatrix& alpha, const std::vector<SNumber>& gamma,
                              const std::vector<Integer>& A_grid, const Weights& w,
                              const Limits& limits) {
  check_alpha_shape(alpha, w);
  check_gamma_shape(gamma, w);
  if (A_grid.empty()) throw ValidationError("empty height grid");
  for (std::size_t k = 0; k < A_grid.size(); ++k) {
    if (A_grid[k] < 1) throw ValidationError("grid heights must be positive");
    if (k > 0 && A_grid[k] <= A_grid[k - 1])
      throw ValidationError("grid must be strictly increasing");
  }
  LiminfRecord rec;
  rec.gamma = gamma;
  rec.A_grid = A_grid;
  Bounds bounds = eta_bounds(A_grid, w.eta, limits);
  std::size_t levels = 0;
  while (levels < A_grid.size()) {
    Integer c = box_count(bounds.per_level[levels]);
    if (c > Integer(static_cast<unsigned long>(limits.point_cap))) break;
    ++levels;
  }
  rec.truncated = levels < A_grid.size();
  if (levels == 0) return rec;
  bool real_only = w.places.size() == 1 && w.places.has_infinity();
  if (real_only)
    liminf_real(alpha, gamma, w, bounds, levels, rec, limits);
  else
    liminf_exact(alpha, gamma, w, bounds, levels, rec, limits);
  return rec;
}

std::string to_string(CIKind k) { return k == CIKind::kDyadic ? "dyadic" : "rotation"; }

CIKind parse_ci_kind(const std::string& s) {
  if (s == "dyadic") return CIKind::kDyadic;
  if (s == "rotation") return CIKind::kRotation;
  throw ValidationError("unknown target sequence '" + s + "'");
}

namespace {

long double rotation_delta(int i) {
  return 1.0L / (static_cast<long double>(i) * logl(static_cast<long double>(i) + 1));
}

std::vector<int> window_starts(const CIExperiment& spec) {
  std::vector<int> starts = spec.window_starts;
  if (starts.empty()) {
    int span = spec.level_last - spec.level_first + 1;
    for (int k = 0; k < 4; ++k) starts.push_back(spec.level_first + k * span / 4);
  }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  return starts;
}

double half_width(double p, std::size_t n) {
  return 1.96 * std::sqrt(p * (1 - p) / static_cast<double>(n));
}

}  // namespace

void validate_ci(const CIExperiment& spec) {
  if (spec.n < 1) throw ValidationError("dimension must be at least 1");
  auto n = static_cast<std::size_t>(spec.n);
  if (spec.c.size() != n || spec.C.size() != n)
    throw ValidationError("scales c and C need one entry per coordinate");
  for (std::size_t j = 0; j < n; ++j) {
    if (spec.c[j] <= 0) throw ValidationError("scale c must be positive");
    if (spec.c[j] > spec.C[j]) throw ValidationError("scale c must not exceed C");
  }
  if (spec.samples < 1) throw ValidationError("sample count must be positive");
  if (spec.level_first < 1 || spec.level_last < spec.level_first)
    throw ValidationError("level range must satisfy 1 <= first <= last");
  if (spec.precision < 1 || spec.precision > 1024)
    throw ValidationError("sampling precision must lie in [1, 1024]");
  if (spec.kind == CIKind::kDyadic) {
    if (static_cast<unsigned>(spec.level_last) > spec.precision)
      throw ValidationError("dyadic levels beyond the sampling precision");
  } else {
    if (spec.n != 1) throw ValidationError("rotation sequences are one-dimensional");
    for (int i = spec.level_first; i < spec.level_last; ++i)
      if (!(rotation_delta(i + 1) < rotation_delta(i)))
        throw ValidationError("delta is not decreasing at level " + std::to_string(i));
  }
  for (int s : spec.window_starts)
    if (s < spec.level_first || s > spec.level_last)
      throw ValidationError("window start outside the level range");
}

CIResult ci_simulation(const CIExperiment& spec) {
  validate_ci(spec);
  const auto n = static_cast<std::size_t>(spec.n);
  const auto levels = static_cast<std::size_t>(spec.level_last - spec.level_first + 1);
  const unsigned P = spec.precision;
  CIResult res;
  res.spec = spec;
  res.hits_c.assign(spec.samples, std::vector<bool>(levels));
  res.hits_C.assign(spec.samples, std::vector<bool>(levels));
  res.discretization_error = std::ldexp(1.0, -static_cast<int>(std::min(P, 1000u)));

  std::vector<long double> centre, delta;
  if (spec.kind == CIKind::kRotation) {
    for (int i = spec.level_first; i <= spec.level_last; ++i) {
      RealNumber t = spec.rotation.scaled(Rational(i));
      centre.push_back((t - RealNumber(Rational(t.floor()))).approx());
      delta.push_back(rotation_delta(i));
    }
    res.discretization_error = std::max(res.discretization_error, std::ldexp(1.0, -52));
  }

  constexpr std::size_t kShard = 1024;
  const std::size_t shards = (spec.samples + kShard - 1) / kShard;
  SplitRng master(spec.seed);
  auto run_shard = [&](std::size_t s) {
    SplitRng rng = master.split(s);
    std::size_t end = std::min(spec.samples, (s + 1) * kShard);
    for (std::size_t k = s * kShard; k < end; ++k) {
      std::vector<Integer> x(n);
      for (auto& v : x) v = rng.bits(P);
      for (std::size_t l = 0; l < levels; ++l) {
        int i = spec.level_first + static_cast<int>(l);
        bool in_c = true, in_C = true;
        for (std::size_t j = 0; j < n; ++j) {
          if (spec.kind == CIKind::kDyadic) {
            // distance to 2^-i Z in units of 2^-P, against s 2^(P-i)
            Integer cell = Integer(1) << (P - static_cast<unsigned>(i));
            Integer r = x[j] % cell;
            Integer d = std::min(r, Integer(cell - r));
            in_c = in_c && d * spec.c[j].get_den() < spec.c[j].get_num() * cell;
            in_C = in_C && d * spec.C[j].get_den() < spec.C[j].get_num() * cell;
          } else {
            long double xv = std::ldexp(static_cast<long double>(x[j].get_d()),
                                        -static_cast<int>(P));
            long double d = std::fabs(xv - centre[l]);
            d = std::min(d, 1 - d);
            in_c = in_c && d < static_cast<long double>(spec.c[j].get_d()) * delta[l];
            in_C = in_C && d < static_cast<long double>(spec.C[j].get_d()) * delta[l];
          }
        }
        res.hits_c[k][l] = in_c;
        res.hits_C[k][l] = in_C;
      }
    }
  };
  std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(shards, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t s = t; s < shards; s += workers) run_shard(s);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t k = 0; k < spec.samples; ++k)
    for (std::size_t l = 0; l < levels; ++l)
      if (res.hits_c[k][l] && !res.hits_C[k][l]) ++res.subset_violations;

  for (int start : window_starts(spec)) {
    CIWindow win;
    win.first = start;
    win.last = spec.level_last;
    auto from = static_cast<std::size_t>(start - spec.level_first);
    for (std::size_t k = 0; k < spec.samples; ++k) {
      bool hc = false, hC = false;
      for (std::size_t l = from; l < levels; ++l) {
        hc = hc || res.hits_c[k][l];
        hC = hC || res.hits_C[k][l];
      }
      win.hits_c += hc;
      win.hits_C += hC;
    }
    auto N = static_cast<double>(spec.samples);
    win.estimate_c = static_cast<double>(win.hits_c) / N;
    win.estimate_C = static_cast<double>(win.hits_C) / N;
    win.difference = win.estimate_C - win.estimate_c;
    win.half_width_c = half_width(win.estimate_c, spec.samples);
    win.half_width_C = half_width(win.estimate_C, spec.samples);
    win.half_width_difference = half_width(std::fabs(win.difference), spec.samples);
    res.windows.push_back(win);
  }
  return res;
}

}  // namespace dioph
