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

#include "exact/snumber.hpp"

namespace dioph {

void SNumber::set(const Place& place, const RealNumber& value) {
  if (place.is_finite() && !value.is_rational())
    throw ValidationError("value at place " + place.to_string() +
                          " must be rational");
  values_[place] = value;
}

const RealNumber& SNumber::at(const Place& place) const {
  auto it = values_.find(place);
  if (it == values_.end())
    throw ValidationError("no value at place " + place.to_string());
  return it->second;
}

const Rational& SNumber::rational_at(const Place& place) const {
  return at(place).as_rational();
}

std::vector<Place> SNumber::places() const {
  std::vector<Place> out;
  for (const auto& [p, v] : values_) out.push_back(p);
  return out;
}

SNumber SNumber::constant(const std::vector<Place>& places, const RealNumber& v) {
  SNumber s;
  for (const auto& p : places) s.set(p, v);
  return s;
}

std::string SNumber::to_string() const {
  std::string s;
  for (const auto& [p, v] : values_) {
    if (!s.empty()) s += ", ";
    s += p.to_string() + ":" + v.to_string();
  }
  return s;
}

SNumber parse_snumber(std::string_view text) {
  SNumber out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view item = text.substr(start, end - start);
    auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw ValidationError("expected place:value in '" + std::string(item) + "'");
    Place p = Place::parse(item.substr(0, colon));
    if (out.has(p))
      throw ValidationError("duplicate place " + p.to_string());
    out.set(p, parse_real(item.substr(colon + 1)));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

Magnitude place_norm(const SNumber& x, const Place& place, const Limits& limits) {
  if (place.is_finite()) return Magnitude(place_norm(x.rational_at(place), place));
  return Magnitude::abs(x.at(place), limits);
}

}  // namespace dioph
