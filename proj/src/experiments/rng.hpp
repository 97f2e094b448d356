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

#include <cstdint>
#include <random>

#include "exact/arith.hpp"

namespace dioph {

std::uint64_t splitmix64(std::uint64_t x);

// Seed of shard `shard` under `master`.
std::uint64_t shard_seed(std::uint64_t master, std::uint64_t shard);

// mt19937_64 seeded through splitmix64. split(s) gives the generator of
// shard s; streams of different shards do not depend on evaluation order.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  SplitRng split(std::uint64_t shard) const { return SplitRng(shard_seed(seed_, shard)); }
  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound); bound > 0.
  Integer below(const Integer& bound);
  // Uniform on [0, 2^bits).
  Integer bits(unsigned long bits);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace dioph
