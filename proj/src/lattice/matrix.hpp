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

#include <optional>
#include <string>
#include <vector>

#include "exact/arith.hpp"

namespace dioph {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row major
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

IntMatrix identity_matrix(std::size_t d);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix to_rational(const IntMatrix& a);
// x * A for a row vector x.
IntVector row_times(const IntVector& x, const IntMatrix& a);
RatVector row_times(const RatVector& x, const RatMatrix& a);

// Row Hermite normal form of the lattice spanned by the rows: upper
// triangular echelon rows with positive pivots and entries above each pivot
// reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix rows);

Integer determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);
std::size_t rank(const RatMatrix& a);
std::optional<RatMatrix> inverse(const RatMatrix& a);

bool is_zero(const IntVector& v);
std::string to_string(const IntVector& v);

}  // namespace dioph
