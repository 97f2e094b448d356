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


#include "experiments/rng.hpp"

#include <algorithm>

namespace dioph {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t shard_seed(std::uint64_t master, std::uint64_t shard) {
  return splitmix64(splitmix64(master) ^ (shard * 0xD1B54A32D192ED03ULL + 1));
}

Integer SplitRng::bits(unsigned long bits) {
  Integer r = 0;
  unsigned long have = 0;
  while (have < bits) {
    unsigned long take = std::min<unsigned long>(64, bits - have);
    std::uint64_t word = next();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    Integer w;
    mpz_import(w.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
    r = (r << take) + w;
    have += take;
  }
  return r;
}

Integer SplitRng::below(const Integer& bound) {
  if (bound <= 0) throw ValidationError("random bound must be positive");
  if (bound == 1) return 0;
  Integer top = bound - 1;
  unsigned long nbits = mpz_sizeinbase(top.get_mpz_t(), 2);
  for (;;) {
    Integer r = bits(nbits);
    if (r < bound) return r;
  }
}

}  // namespace dioph
