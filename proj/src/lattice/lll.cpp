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

#include "lattice/lll.hpp"

#include <cmath>
#include <utility>

namespace dioph {

long double to_long_double(const Integer& x) {
  long bits = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
  if (bits <= 63) return static_cast<long double>(x.get_si());
  long shift = bits - 63;
  Integer t;
  mpz_tdiv_q_2exp(t.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  return std::ldexp(static_cast<long double>(t.get_si()), static_cast<int>(shift));
}

long double to_long_double(const Rational& x) {
  long nb = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2));
  long db = static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  if (nb < 1000 && db < 1000)
    return to_long_double(x.get_num()) / to_long_double(x.get_den());
  // Rescale to keep both parts in range.
  long shift = db - nb;
  Integer num = x.get_num();
  Integer den = x.get_den();
  if (shift > 0)
    num <<= static_cast<mp_bitcnt_t>(shift);
  else
    den <<= static_cast<mp_bitcnt_t>(-shift);
  long double q = to_long_double(num) / to_long_double(den);
  return std::ldexp(q, static_cast<int>(-shift));
}

namespace {

long double dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return to_long_double(s);
}

Integer to_integer(long double q) {
  if (std::fabs(q) < 9.0e18L) return Integer(static_cast<long>(q));
  int e = 0;
  long double m = std::frexp(q, &e);
  Integer r(static_cast<long>(std::ldexp(m, 62)));
  if (e > 62)
    r <<= static_cast<mp_bitcnt_t>(e - 62);
  else
    r >>= static_cast<mp_bitcnt_t>(62 - e);
  return r;
}

}  // namespace

IntMatrix lll_reduce(IntMatrix& b, long double delta) {
  const std::size_t d = b.size();
  IntMatrix u = identity_matrix(d);
  if (d <= 1) return u;
  std::vector<std::vector<long double>> mu(d, std::vector<long double>(d, 0));
  std::vector<std::vector<long double>> r(d, std::vector<long double>(d, 0));
  std::vector<long double> bs(d, 0);

  auto gram_schmidt_row = [&](std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      long double v = dot(b[k], b[j]);
      for (std::size_t i = 0; i < j; ++i) v -= mu[j][i] * r[k][i];
      r[k][j] = v;
      if (j < k) mu[k][j] = bs[j] != 0 ? v / bs[j] : 0;
    }
    bs[k] = r[k][k];
  };

  gram_schmidt_row(0);
  std::size_t k = 1;
  long iterations = 0;
  const long max_iterations = 200000;
  while (k < d && iterations++ < max_iterations) {
    for (int pass = 0; pass < 64; ++pass) {
      gram_schmidt_row(k);
      bool reduced = false;
      for (std::size_t jj = k; jj-- > 0;) {
        if (std::fabs(mu[k][jj]) <= 0.51L) continue;
        long double q = std::nearbyint(mu[k][jj]);
        Integer qi = to_integer(q);
        for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= qi * b[jj][c];
        for (std::size_t c = 0; c < d; ++c) u[k][c] -= qi * u[jj][c];
        for (std::size_t i = 0; i < jj; ++i) mu[k][i] -= q * mu[jj][i];
        mu[k][jj] -= q;
        reduced = true;
      }
      if (!reduced) break;
    }
    gram_schmidt_row(k);
    if (bs[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * bs[k - 1]) {
      std::swap(b[k], b[k - 1]);
      std::swap(u[k], u[k - 1]);
      if (k > 1) {
        --k;
      } else {
        gram_schmidt_row(0);
      }
    } else {
      ++k;
    }
  }
  return u;
}

}  // namespace dioph
