// Copyright 2026 The tmobo Authors. All Rights Reserved.
//
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
// =============================================================================

#ifndef TMOBO_RNG_HPP
#define TMOBO_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace tmobo {

// Seed-splitting rule used everywhere in the toolkit.
//
// A run has a single root seed. The seed of replication r is `root + r`,
// and every independent random stream inside a replication is derived as
//
//   s = splitmix64(rep_seed); for each id on the path: s = splitmix64(s ^ id)
//
// where the path is (stream kind, then any sub-indices such as iteration,
// objective or start number). Streams are therefore stable: adding
// replications, running them concurrently, or changing how many starts a
// sibling stream consumes never perturbs an existing stream.

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Stream-kind tags for derive_seed paths.
enum StreamId : std::uint64_t {
  kLhsStream = 1,
  kNoiseStream = 2,
  kFitStream = 3,
  kAcqStream = 4,
};

inline std::uint64_t derive_seed(std::uint64_t root,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(root);
  for (std::uint64_t id : path) s = splitmix64(s ^ id);
  return s;
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace tmobo

#endif  // TMOBO_RNG_HPP
