// Copyright 2026 The qcollide Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace qcollide {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Used to derive independent seeds from structured
/// inputs (grid point, trial index, stream id).
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Engine for the given seed and stream. Different streams of the same seed
/// are statistically independent.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng{splitmix64(seed ^ splitmix64(stream + 0x5851f42d4c957f2dULL))};
}

}  // namespace qcollide
