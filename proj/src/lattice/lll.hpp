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

#include "lattice/matrix.hpp"

namespace dioph {

long double to_long_double(const Integer& x);
long double to_long_double(const Rational& x);

// LLL reduction of the rows of `basis` in place (Schnorr-Euchner: exact
// integer rows, floating-point Gram-Schmidt). Returns the unimodular U with
// reduced = U * original. The result is only a heuristic preconditioner.
IntMatrix lll_reduce(IntMatrix& basis, long double delta = 0.99L);

}  // namespace dioph
