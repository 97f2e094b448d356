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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "exact/magnitude.hpp"

namespace dioph {

// One value per place: an exact rational at finite places, a RealNumber at
// infinity.
class SNumber {
 public:
  SNumber() = default;

  void set(const Place& place, const RealNumber& value);
  bool has(const Place& place) const { return values_.count(place) != 0; }
  const RealNumber& at(const Place& place) const;
  // Finite places only.
  const Rational& rational_at(const Place& place) const;
  std::vector<Place> places() const;

  // Same value at every place of `places`.
  static SNumber constant(const std::vector<Place>& places, const RealNumber& v);

  friend bool operator==(const SNumber&, const SNumber&) = default;

  std::string to_string() const;

 private:
  std::map<Place, RealNumber> values_;
};

// "2:7/4, inf:sqrt(5)/2"
SNumber parse_snumber(std::string_view text);

// |x|_nu for one component.
Magnitude place_norm(const SNumber& x, const Place& place,
                     const Limits& limits = {});

}  // namespace dioph
