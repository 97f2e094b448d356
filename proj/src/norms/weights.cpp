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

#include "norms/weights.hpp"

#include <algorithm>

namespace dioph {

namespace {

bool place_order(const Place& a, const Place& b) {
  if (a.is_infinite() != b.is_infinite()) return b.is_infinite();
  return a.p() < b.p();
}

}  // namespace

PlaceSet::PlaceSet(std::vector<Place> places) : places_(std::move(places)) {
  if (places_.empty()) throw ValidationError("place set must be nonempty");
  std::sort(places_.begin(), places_.end(), place_order);
  for (std::size_t i = 1; i < places_.size(); ++i) {
    if (places_[i] == places_[i - 1])
      throw ValidationError("duplicate place " + places_[i].to_string());
  }
}

std::vector<Place> PlaceSet::finite() const {
  std::vector<Place> out;
  for (const auto& p : places_)
    if (p.is_finite()) out.push_back(p);
  return out;
}

bool PlaceSet::has_infinity() const {
  return !places_.empty() && places_.back().is_infinite();
}

std::size_t PlaceSet::index_of(const Place& p) const {
  for (std::size_t i = 0; i < places_.size(); ++i)
    if (places_[i] == p) return i;
  throw ValidationError("place " + p.to_string() + " not in S");
}

bool PlaceSet::contains(const Place& p) const {
  return std::find(places_.begin(), places_.end(), p) != places_.end();
}

Integer PlaceSet::prime_product() const {
  Integer r = 1;
  for (const auto& p : places_)
    if (p.is_finite()) r *= static_cast<unsigned long>(p.p());
  return r;
}

std::string PlaceSet::to_string() const {
  std::string s;
  for (const auto& p : places_) {
    if (!s.empty()) s += ",";
    s += p.to_string();
  }
  return s;
}

PlaceSet parse_places(std::string_view text) {
  std::vector<Place> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      out.push_back(Place::parse(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return PlaceSet(std::move(out));
}

Weights WeightsReal::to_weights() const {
  Weights w;
  w.m = static_cast<int>(eta.size());
  w.n = static_cast<int>(tau.size());
  w.places = PlaceSet::real();
  for (const auto& t : tau) w.tau.push_back({t});
  w.eta = eta;
  return w;
}

std::string WeightsReport::to_string() const {
  std::string s = ok ? "ok" : "invalid";
  s += ": omega=" + std::to_string(omega) + ", sum tau=" + dioph::to_string(tau_sum) +
       ", sum eta=" + dioph::to_string(eta_sum);
  for (const auto& v : violations) s += "; " + v;
  return s;
}

WeightsReport validate_weights(const Weights& w) {
  WeightsReport r;
  if (w.m < 1 || w.n < 1) {
    r.ok = false;
    r.violations.push_back("dimensions m, n must be at least 1");
    return r;
  }
  r.omega = w.omega();
  if (w.places.size() == 0) {
    r.ok = false;
    r.violations.push_back("place set is empty");
    return r;
  }
  if (w.tau.size() != static_cast<std::size_t>(w.n)) {
    r.ok = false;
    r.violations.push_back("tau has " + std::to_string(w.tau.size()) +
                           " rows, expected n=" + std::to_string(w.n));
  }
  for (std::size_t i = 0; i < w.tau.size(); ++i) {
    if (w.tau[i].size() != w.places.size()) {
      r.ok = false;
      r.violations.push_back("tau row " + std::to_string(i + 1) + " has " +
                             std::to_string(w.tau[i].size()) +
                             " entries, expected one per place");
    }
    for (const auto& t : w.tau[i]) {
      r.tau_sum += t;
      if (t <= 0) {
        r.ok = false;
        r.violations.push_back("tau entry " + dioph::to_string(t) + " is not positive");
      }
    }
  }
  if (w.eta.size() != static_cast<std::size_t>(r.omega)) {
    r.ok = false;
    r.violations.push_back("eta has " + std::to_string(w.eta.size()) +
                           " entries, expected omega=" + std::to_string(r.omega));
  }
  for (const auto& e : w.eta) {
    r.eta_sum += e;
    if (e <= 0) {
      r.ok = false;
      r.violations.push_back("eta entry " + dioph::to_string(e) + " is not positive");
    }
  }
  if (r.tau_sum != r.omega) {
    r.ok = false;
    r.violations.push_back("sum of tau is " + dioph::to_string(r.tau_sum) +
                           ", expected omega=" + std::to_string(r.omega));
  }
  if (r.eta_sum != r.omega) {
    r.ok = false;
    r.violations.push_back("sum of eta is " + dioph::to_string(r.eta_sum) +
                           ", expected omega=" + std::to_string(r.omega));
  }
  return r;
}

WeightsReport validate_weights(const WeightsReal& w) {
  WeightsReport r;
  r.omega = 0;
  for (const auto& t : w.tau) {
    r.tau_sum += t;
    if (t <= 0) {
      r.ok = false;
      r.violations.push_back("tau entry " + dioph::to_string(t) + " is not positive");
    }
  }
  for (const auto& e : w.eta) {
    r.eta_sum += e;
    if (e <= 0) {
      r.ok = false;
      r.violations.push_back("eta entry " + dioph::to_string(e) + " is not positive");
    }
  }
  if (w.tau.empty() || w.eta.empty()) {
    r.ok = false;
    r.violations.push_back("tau and eta must be nonempty");
  }
  if (r.tau_sum != r.eta_sum) {
    r.ok = false;
    r.violations.push_back("sum of tau " + dioph::to_string(r.tau_sum) +
                           " differs from sum of eta " + dioph::to_string(r.eta_sum));
  }
  return r;
}

void require_valid(const Weights& w) {
  WeightsReport r = validate_weights(w);
  if (!r.ok) throw ValidationError("weights " + r.to_string());
}

Magnitude tau_norm(const std::vector<SNumber>& x, const Weights& w,
                   const Limits& limits) {
  if (x.size() != static_cast<std::size_t>(w.n))
    throw ValidationError("tau_norm: vector length differs from n");
  Magnitude best;
  for (int i = 0; i < w.n; ++i) {
    for (const auto& p : w.places.places()) {
      Magnitude v = place_norm(x[static_cast<std::size_t>(i)], p, limits);
      if (v.is_zero()) continue;
      best = max(best, v.pow(1 / w.tau_at(i, p)), limits);
    }
  }
  return best;
}

Magnitude tau_norm_real(const std::vector<RealNumber>& x,
                        const std::vector<Rational>& tau, const Limits& limits) {
  if (x.size() != tau.size())
    throw ValidationError("tau_norm: vector length differs from weights");
  Magnitude best;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Magnitude v = Magnitude::abs(x[i], limits);
    if (v.is_zero()) continue;
    best = max(best, v.pow(1 / tau[i]), limits);
  }
  return best;
}

Magnitude eta_norm(const std::vector<Integer>& v, const std::vector<Rational>& eta) {
  if (v.size() != eta.size())
    throw ValidationError("eta_norm: vector length differs from omega");
  Magnitude best;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    best = max(best, Magnitude(Rational(abs(v[j]))).pow(1 / eta[j]));
  }
  return best;
}

}  // namespace dioph
