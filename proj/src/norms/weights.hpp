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

#include <string>
#include <string_view>
#include <vector>

#include "exact/snumber.hpp"

namespace dioph {

using SVector = std::vector<SNumber>;
// alpha[j][i]: m rows indexed by the a-coordinate, n columns, so that
// (a alpha)_i = sum_j a_j alpha[j][i].
using SMatrix = std::vector<std::vector<SNumber>>;

// Finite places in increasing order, then infinity if present.
class PlaceSet {
 public:
  PlaceSet() = default;
  explicit PlaceSet(std::vector<Place> places);
  static PlaceSet real() { return PlaceSet({Place::infinity()}); }

  const std::vector<Place>& places() const { return places_; }
  std::vector<Place> finite() const;
  bool has_infinity() const;
  std::size_t size() const { return places_.size(); }
  std::size_t index_of(const Place& p) const;
  bool contains(const Place& p) const;
  // Product of the finite primes.
  Integer prime_product() const;
  std::string to_string() const;

  friend bool operator==(const PlaceSet&, const PlaceSet&) = default;

 private:
  std::vector<Place> places_;
};

// "2,3,inf"
PlaceSet parse_places(std::string_view text);

struct Weights {
  int m = 1;
  int n = 1;
  PlaceSet places;
  // tau[i][k] is the weight of row i at places.places()[k].
  std::vector<std::vector<Rational>> tau;
  std::vector<Rational> eta;

  int omega() const { return places.has_infinity() ? m : m + n; }
  const Rational& tau_at(int i, const Place& p) const {
    return tau.at(static_cast<std::size_t>(i)).at(places.index_of(p));
  }
};

// Real-place weights: tau over the n rows, eta over the m columns.
struct WeightsReal {
  std::vector<Rational> tau;
  std::vector<Rational> eta;

  Weights to_weights() const;
};

struct WeightsReport {
  bool ok = true;
  int omega = 0;
  Rational tau_sum = 0;
  Rational eta_sum = 0;
  std::vector<std::string> violations;

  std::string to_string() const;
};

WeightsReport validate_weights(const Weights& w);
WeightsReport validate_weights(const WeightsReal& w);
// Throws ValidationError carrying the report text.
void require_valid(const Weights& w);

// |x|_tau = max_{i,nu} |x_{i,nu}|_nu^{1/tau_{i,nu}}
Magnitude tau_norm(const std::vector<SNumber>& x, const Weights& w,
                   const Limits& limits = {});
// Real-place residual vector.
Magnitude tau_norm_real(const std::vector<RealNumber>& x,
                        const std::vector<Rational>& tau,
                        const Limits& limits = {});
// |v|_eta = max_j |v_j|^{1/eta_j}
Magnitude eta_norm(const std::vector<Integer>& v, const std::vector<Rational>& eta);

}  // namespace dioph
