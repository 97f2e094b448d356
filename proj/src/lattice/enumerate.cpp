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

#include "lattice/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "lattice/lll.hpp"

namespace dioph {

namespace {

long bit_length(const Rational& x) {
  if (x == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
}

// Exact membership test with cheap integer and interval fast paths.
class BoxFilter {
 public:
  BoxFilter(const WeightedBox& box, const Limits& limits) : box_(box), limits_(limits) {
    const std::size_t d = box.dimension();
    const std::size_t p = box.plain();
    for (std::size_t j = 0; j < p; ++j) {
      const Magnitude& r = box.radius()[j];
      Integer f = r.floor(limits);
      if (box.strict()[j] && compare(r, Magnitude(Rational(f)), limits) == 0) f -= 1;
      plain_bound_.push_back(f);
    }
    for (std::size_t k = p; k < d; ++k) {
      RealInterval ri = box.radius()[k].enclose(160);
      r_lo_.push_back(ri.lo());
      r_hi_.push_back(ri.hi());
      std::vector<Rational> mid, err;
      for (std::size_t j = 0; j < p; ++j) {
        const RealNumber& s = box.shear()[j][k - p];
        if (s.is_rational()) {
          mid.push_back(s.rational_part());
          err.push_back(0);
        } else {
          RealInterval iv = refine_constant(s, 160, limits);
          mid.push_back(iv.midpoint());
          err.push_back(iv.width() / 2);
        }
      }
      mid_.push_back(std::move(mid));
      err_.push_back(std::move(err));
    }
  }

  bool contains(const IntVector& z) const {
    const std::size_t p = box_.plain();
    for (std::size_t j = 0; j < p; ++j)
      if (abs(z[j]) > plain_bound_[j]) return false;
    for (std::size_t k = p; k < box_.dimension(); ++k) {
      const std::size_t q = k - p;
      Rational f(z[k]);
      Rational e = 0;
      for (std::size_t j = 0; j < p; ++j) {
        if (z[j] == 0) continue;
        f += mid_[q][j] * z[j];
        e += err_[q][j] * abs(z[j]);
      }
      Rational af = abs_of(f);
      if (af + e < r_lo_[q]) continue;
      if (af - e > r_hi_[q]) return false;
      int c = compare(Magnitude::abs(box_.form(k, z), limits_), box_.radius()[k], limits_);
      if (box_.strict()[k] ? c >= 0 : c > 0) return false;
    }
    return true;
  }

 private:
  const WeightedBox& box_;
  const Limits& limits_;
  std::vector<Integer> plain_bound_;
  std::vector<Rational> r_lo_, r_hi_;
  std::vector<std::vector<Rational>> mid_, err_;
};

struct Node {
  std::size_t count = 0;
  std::size_t cap = 0;
  void tick() {
    if (++count > cap) throw ResourceError("enumeration node cap exceeded");
  }
};

// Schnorr-Euchner style enumeration of x with sum_i bs_i (x_i + sum_{j>i}
// mu_ji x_j)^2 <= bound, first nonzero coordinate from the top positive.
template <class T>
class Enumerator {
 public:
  Enumerator(std::vector<std::vector<T>> mu, std::vector<T> bs, T bound,
             Node& node, bool approximate)
      : mu_(std::move(mu)), bs_(std::move(bs)), bound_(bound), node_(node),
        approximate_(approximate), x_(bs_.size(), 0) {}

  bool run(const std::function<bool(const std::vector<long>&)>& emit) {
    emit_ = &emit;
    return level(static_cast<long>(bs_.size()) - 1, T(0), true);
  }

 private:
  bool level(long i, const T& partial, bool top_zero);

  std::vector<std::vector<T>> mu_;
  std::vector<T> bs_;
  T bound_;
  Node& node_;
  bool approximate_;
  std::vector<long> x_;
  const std::function<bool(const std::vector<long>&)>* emit_ = nullptr;
};

long checked_long(long double v) {
  if (!std::isfinite(v) || std::fabs(v) > 4.0e18L)
    throw ResourceError("enumeration coordinate out of range");
  return static_cast<long>(v);
}

long checked_long(const Integer& v) {
  if (!v.fits_slong_p()) throw ResourceError("enumeration coordinate out of range");
  return v.get_si();
}

template <>
bool Enumerator<long double>::level(long i, const long double& partial, bool top_zero) {
  const auto ui = static_cast<std::size_t>(i);
  long double c = 0;
  long double mag = 0;
  for (std::size_t j = ui + 1; j < bs_.size(); ++j) {
    c -= mu_[j][ui] * static_cast<long double>(x_[j]);
    mag += std::fabs(mu_[j][ui] * static_cast<long double>(x_[j]));
  }
  long double rem = bound_ - partial;
  if (rem < 0) rem = 0;
  long double t = std::sqrt(rem / bs_[ui]);
  long double slack = 1e-9L * (1 + mag + t);
  long lo = checked_long(std::ceil(c - t - slack));
  long hi = checked_long(std::floor(c + t + slack));
  if (top_zero && lo < 0) lo = 0;
  for (long v = lo; v <= hi; ++v) {
    node_.tick();
    x_[ui] = v;
    long double diff = static_cast<long double>(v) - c;
    long double part = partial + bs_[ui] * diff * diff;
    if (part > bound_) continue;
    bool still_zero = top_zero && v == 0;
    if (i == 0) {
      if (still_zero) continue;
      if (!(*emit_)(x_)) return false;
    } else if (!level(i - 1, part, still_zero)) {
      return false;
    }
  }
  x_[ui] = 0;
  return true;
}

template <>
bool Enumerator<Rational>::level(long i, const Rational& partial, bool top_zero) {
  const auto ui = static_cast<std::size_t>(i);
  Rational c = 0;
  for (std::size_t j = ui + 1; j < bs_.size(); ++j) c -= mu_[j][ui] * x_[j];
  Rational rem = bound_ - partial;
  if (rem < 0) return true;
  Rational t = RealInterval(rem / bs_[ui], 64).root(2).hi();
  long lo = checked_long(ceil_of(c - t));
  long hi = checked_long(floor_of(c + t));
  if (top_zero && lo < 0) lo = 0;
  for (long v = lo; v <= hi; ++v) {
    node_.tick();
    x_[ui] = v;
    Rational diff = Rational(v) - c;
    Rational part = partial + bs_[ui] * diff * diff;
    if (part > bound_) continue;
    bool still_zero = top_zero && v == 0;
    if (i == 0) {
      if (still_zero) continue;
      if (!(*emit_)(x_)) return false;
    } else if (!level(i - 1, part, still_zero)) {
      return false;
    }
  }
  x_[ui] = 0;
  return true;
}

}  // namespace

bool for_each_box_point(const IntegerLattice& lattice, const WeightedBox& box,
                        const std::function<bool(const IntVector&)>& visit,
                        const Limits& limits) {
  const std::size_t d = box.dimension();
  if (lattice.dimension() != d)
    throw ValidationError("lattice and box dimensions differ");
  if (d > limits.dimension_limit)
    throw ResourceError("dimension " + std::to_string(d) + " exceeds limit " +
                        std::to_string(limits.dimension_limit));
  if (d == 0) return true;
  const std::size_t p = box.plain();

  // Rational outer box: |y_k| <= 1 for normalized forms y = x G.
  std::vector<Rational> R(d);
  for (std::size_t k = 0; k < d; ++k) R[k] = box.radius()[k].upper_rational(64);
  RatMatrix shear_mid(p, RatVector(d - p, 0));
  std::vector<Rational> R_out = R;
  for (std::size_t k = p; k < d; ++k) {
    Rational slack = 0;
    for (std::size_t j = 0; j < p; ++j) {
      const RealNumber& s = box.shear()[j][k - p];
      if (s.is_rational()) {
        shear_mid[j][k - p] = s.rational_part();
        continue;
      }
      long need = bit_length(R[j]) - bit_length(R[k]) + 40 +
                  static_cast<long>(std::log2(static_cast<double>(p) + 1));
      unsigned bits = static_cast<unsigned>(std::max(64L, need));
      RealInterval iv = refine_constant(s, bits, limits);
      shear_mid[j][k - p] = iv.midpoint();
      slack += R[j] * (iv.width() / 2);
    }
    R_out[k] += slack;
  }
  RatMatrix G(d, RatVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    const IntVector& b = lattice.basis()[i];
    for (std::size_t j = 0; j < p; ++j) G[i][j] = Rational(b[j]) / R_out[j];
    for (std::size_t k = p; k < d; ++k) {
      Rational v(b[k]);
      for (std::size_t j = 0; j < p; ++j)
        if (b[j] != 0) v += shear_mid[j][k - p] * b[j];
      G[i][k] = v / R_out[k];
    }
  }
  Integer den = 1;
  for (const auto& row : G)
    for (const auto& v : row) den = lcm_of(den, v.get_den());
  IntMatrix A(d, IntVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) A[i][j] = G[i][j].get_num() * (den / G[i][j].get_den());
  IntMatrix U = lll_reduce(A);
  IntMatrix UB = multiply(U, lattice.basis());

  // Gram matrix of the reduced rows, normalized so the bound is d.
  RatMatrix gram(d, RatVector(d));
  Rational den2 = Rational(den) * den;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Integer s = 0;
      for (std::size_t c = 0; c < d; ++c) s += A[i][c] * A[j][c];
      gram[i][j] = gram[j][i] = Rational(s) / den2;
    }

  BoxFilter filter(box, limits);
  Node node{0, limits.node_cap};
  std::size_t emitted = 0;
  auto emit = [&](const std::vector<long>& x) -> bool {
    IntVector z(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t c = 0; c < d; ++c) z[c] += UB[i][c] * x[i];
    }
    if (!filter.contains(z)) return true;
    if (++emitted > limits.point_cap) throw ResourceError("enumeration point cap exceeded");
    if (!visit(z)) return false;
    IntVector neg(d);
    for (std::size_t c = 0; c < d; ++c) neg[c] = -z[c];
    return visit(neg);
  };

  // Floating Cholesky; fall back to exact arithmetic when it looks unsafe.
  std::vector<std::vector<long double>> mu(d, std::vector<long double>(d, 0));
  std::vector<long double> bs(d, 0);
  bool safe = true;
  for (std::size_t i = 0; i < d && safe; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      long double v = to_long_double(gram[i][j]);
      for (std::size_t k = 0; k < j; ++k) v -= mu[i][k] * mu[j][k] * bs[k];
      if (j < i) {
        mu[i][j] = v / bs[j];
        if (!std::isfinite(mu[i][j]) || std::fabs(mu[i][j]) > 1e4L) safe = false;
      } else {
        bs[i] = v;
        if (!(v > 0) || !std::isfinite(v)) safe = false;
      }
    }
  }
  if (safe) {
    long double hi = 0, lo = 0;
    for (std::size_t i = 0; i < d; ++i) {
      long double v = to_long_double(gram[i][i]);
      hi = std::max(hi, v);
      lo = (i == 0) ? bs[i] : std::min(lo, bs[i]);
    }
    if (hi / lo > 1e24L) safe = false;
  }
  if (safe) {
    long double bound = static_cast<long double>(d) * (1 + 1e-12L);
    Enumerator<long double> e(std::move(mu), std::move(bs), bound, node, true);
    return e.run(emit);
  }
  std::vector<std::vector<Rational>> qmu(d, std::vector<Rational>(d, 0));
  std::vector<Rational> qbs(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rational v = gram[i][j];
      for (std::size_t k = 0; k < j; ++k) v -= qmu[i][k] * qmu[j][k] * qbs[k];
      if (j < i)
        qmu[i][j] = v / qbs[j];
      else
        qbs[i] = v;
    }
  }
  Enumerator<Rational> e(std::move(qmu), std::move(qbs), Rational(static_cast<long>(d)),
                         node, false);
  return e.run(emit);
}

EnumerationResult enumerate_box(const IntegerLattice& lattice, const WeightedBox& box,
                                std::size_t cap, const Limits& limits) {
  EnumerationResult out;
  for_each_box_point(
      lattice, box,
      [&](const IntVector& z) {
        if (out.points.size() >= cap) {
          out.truncated = true;
          return false;
        }
        out.points.push_back(z);
        return true;
      },
      limits);
  std::sort(out.points.begin(), out.points.end());
  return out;
}

bool has_nonzero_point(const IntegerLattice& lattice, const WeightedBox& box,
                       const Limits& limits) {
  bool found = false;
  for_each_box_point(
      lattice, box,
      [&](const IntVector&) {
        found = true;
        return false;
      },
      limits);
  return found;
}

namespace {

// Interval enclosure of the gauge, cheap enough to evaluate on every
// enumerated point. Exact gauges are only computed where enclosures overlap.
class GaugeEnclosure {
 public:
  GaugeEnclosure(const WeightedBox& box, const Limits& limits) : box_(box) {
    for (std::size_t k = 0; k < box.dimension(); ++k) {
      RealInterval r = box.radius()[k].enclose(kBits);
      if (r.lo() <= 0) r = RealInterval(box.radius()[k].lower_rational(256), r.hi(), kBits);
      inv_lo_.push_back(1 / r.hi());
      inv_hi_.push_back(1 / r.lo());
    }
    shear_.assign(box.plain(), {});
    for (std::size_t j = 0; j < box.shear().size(); ++j)
      for (const auto& s : box.shear()[j]) shear_[j].push_back(refine_constant(s, kBits, limits));
  }

  RealInterval operator()(const IntVector& z) const {
    Rational lo = 0, hi = 0;
    for (std::size_t k = 0; k < box_.dimension(); ++k) {
      Rational flo(z[k]), fhi(z[k]);
      if (k >= box_.plain()) {
        for (std::size_t j = 0; j < box_.plain(); ++j) {
          if (z[j] == 0) continue;
          const RealInterval& s = shear_[j][k - box_.plain()];
          if (z[j] > 0) {
            flo += s.lo() * z[j];
            fhi += s.hi() * z[j];
          } else {
            flo += s.hi() * z[j];
            fhi += s.lo() * z[j];
          }
        }
      }
      Rational alo, ahi;
      if (flo >= 0) {
        alo = flo;
        ahi = fhi;
      } else if (fhi <= 0) {
        alo = -fhi;
        ahi = -flo;
      } else {
        alo = 0;
        ahi = std::max(Rational(-flo), fhi);
      }
      lo = std::max(lo, Rational(alo * inv_lo_[k]));
      hi = std::max(hi, Rational(ahi * inv_hi_[k]));
    }
    return RealInterval(lo, hi, kBits);
  }

 private:
  static constexpr unsigned kBits = 128;
  const WeightedBox& box_;
  std::vector<Rational> inv_lo_, inv_hi_;
  std::vector<std::vector<RealInterval>> shear_;
};

struct Candidate {
  IntVector z;
  RealInterval approx;
  std::optional<Magnitude> gauge;
};

// Incremental row echelon form over Q for independence tests.
class Span {
 public:
  explicit Span(std::size_t d) : d_(d) {}
  std::size_t size() const { return rows_.size(); }
  bool add(const IntVector& z) {
    RatVector v(z.begin(), z.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[pivot_[r]];
      if (c == 0) continue;
      Rational f = c / rows_[r][pivot_[r]];
      for (std::size_t j = 0; j < d_; ++j) v[j] -= f * rows_[r][j];
    }
    for (std::size_t j = 0; j < d_; ++j) {
      if (v[j] != 0) {
        rows_.push_back(std::move(v));
        pivot_.push_back(j);
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t d_;
  RatMatrix rows_;
  std::vector<std::size_t> pivot_;
};

}  // namespace

MinimaReport successive_minima(const IntegerLattice& lattice, const WeightedBox& box_in,
                               const Limits& limits) {
  const std::size_t d = box_in.dimension();
  WeightedBox box = box_in.closed();
  MinimaReport rep;
  rep.determinant = lattice.determinant();
  rep.volume = box.volume();
  GaugeEnclosure enclose(box, limits);
  // Start near Minkowski's bound for the first minimum.
  long double est =
      std::pow(std::ldexp(to_long_double(Rational(rep.determinant)), static_cast<int>(d)) /
                   static_cast<long double>(rep.volume.approx()),
               1.0L / static_cast<long double>(d));
  if (!std::isfinite(est) || est <= 0) est = 1;
  Rational lambda = make_rational(Integer(static_cast<long>(std::ceil(est * 1024))), 1024);
  for (int round = 0; round < 200; ++round) {
    std::vector<Candidate> cands;
    Span all(d);
    WeightedBox scaled = box.scaled(Magnitude(lambda));
    for_each_box_point(
        lattice, scaled,
        [&](const IntVector& z) {
          // Keep one representative of +-z.
          for (const auto& x : z) {
            if (x == 0) continue;
            if (x > 0) {
              cands.push_back({z, enclose(z), std::nullopt});
              if (all.size() < d) all.add(z);
            }
            break;
          }
          return true;
        },
        limits);
    if (all.size() < d) {
      lambda *= 2;
      continue;
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.approx.lo() != b.approx.lo()) return a.approx.lo() < b.approx.lo();
      return a.z < b.z;
    });
    Span chosen(d);
    auto exact_less = [&](const Candidate& a, const Candidate& b) {
      int c = compare(*a.gauge, *b.gauge, limits);
      if (c != 0) return c < 0;
      return a.z < b.z;
    };
    // Blocks of mutually overlapping enclosures are ordered exactly; blocks
    // themselves are already in order.
    for (std::size_t i = 0; i < cands.size() && chosen.size() < d;) {
      std::size_t j = i + 1;
      Rational top = cands[i].approx.hi();
      while (j < cands.size() && cands[j].approx.lo() <= top) {
        top = std::max(top, cands[j].approx.hi());
        ++j;
      }
      if (j - i > 1) {
        for (std::size_t k = i; k < j; ++k) cands[k].gauge = box.gauge(cands[k].z, limits);
        std::sort(cands.begin() + static_cast<long>(i), cands.begin() + static_cast<long>(j),
                  exact_less);
      }
      for (std::size_t k = i; k < j && chosen.size() < d; ++k) {
        if (!chosen.add(cands[k].z)) continue;
        if (!cands[k].gauge) cands[k].gauge = box.gauge(cands[k].z, limits);
        rep.lambda.push_back(*cands[k].gauge);
        rep.witnesses.push_back(cands[k].z);
      }
      i = j;
    }
    return rep;
  }
  throw ResourceError("successive minima search did not reach full rank");
}

SandwichCheck check_sandwich(const MinimaReport& r, const Limits& limits) {
  const std::size_t d = r.lambda.size();
  Magnitude prod = r.volume;
  for (const auto& l : r.lambda) prod = prod * l;
  Integer two_d = ipow(Integer(2), d);
  Integer fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<unsigned long>(i);
  SandwichCheck s;
  s.lower = less_equal(Magnitude(make_rational(two_d * r.determinant, fact)), prod, limits);
  s.upper = less_equal(prod, Magnitude(Rational(two_d * r.determinant)), limits);
  return s;
}

}  // namespace dioph
