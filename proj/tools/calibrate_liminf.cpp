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


// Brute-force calibration of the liminf fixture for alpha = phi.
// Prints the median of min_{0 < |a| <= A} |a| * ||a phi - gamma|| over the
// sampled gammas for each A, using high precision floats and a full scan.

#include <gmpxx.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "experiments/experiments.hpp"

using namespace dioph;

namespace {

constexpr unsigned kBits = 256;

mpf_class frac(const mpf_class& x) {
  mpf_class f = x - mpf_class(floor(x), kBits);
  return f;
}

mpf_class dist(const mpf_class& x) {
  mpf_class f = frac(x);
  return f <= 0.5 ? f : mpf_class(1 - f, kBits);
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20261016;
  std::size_t samples = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 200;
  const std::vector<long> grid = {100, 1000, 10000, 100000};

  mpf_class phi(5, kBits);
  phi = (1 + sqrt(phi)) / 2;
  SplitRng master(seed);
  std::vector<std::vector<double>> cols(grid.size());
  for (std::size_t s = 0; s < samples; ++s) {
    SplitRng rng = master.split(s);
    auto gamma = sample_gamma(rng, PlaceSet::real(), 1, 64);
    mpf_class g(gamma[0].at(Place::infinity()).as_rational(), kBits);
    mpf_class best(1e9, kBits);
    mpf_class up = frac(-g), down = frac(-g);  // a phi - gamma for a and -a
    std::size_t k = 0;
    for (long a = 1; a <= grid.back(); ++a) {
      up = frac(up + phi);
      down = frac(down - phi);
      mpf_class v = std::min(dist(up), dist(down)) * a;
      if (v < best) best = v;
      if (a == grid[k]) cols[k++].push_back(best.get_d());
    }
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    auto& c = cols[k];
    std::sort(c.begin(), c.end());
    double med = c.size() % 2 ? c[c.size() / 2] : (c[c.size() / 2 - 1] + c[c.size() / 2]) / 2;
    std::printf("A=%ld median=%.9g\n", grid[k], med);
  }
  return 0;
}
