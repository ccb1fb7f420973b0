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

// Independent reference computations for the tests. Nothing here calls into
// the library's Grover engine.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>

namespace qcollide::testing {

/// sin^2((2j+1) asin(sqrt(t/N))) in long double.
inline long double marked_mass(std::size_t n, std::size_t t, std::uint64_t j) {
  const long double theta = std::asin(std::sqrt(static_cast<long double>(t) / n));
  const long double s = std::sin((2.0L * j + 1.0L) * theta);
  return s * s;
}

/// Nearest integer to the real optimum j* = pi/(4 theta) - 1/2, where
/// (2j* + 1) theta = pi/2.
inline std::uint64_t nearest_optimal_iterations(std::size_t n, std::size_t t) {
  const long double theta = std::asin(std::sqrt(static_cast<long double>(t) / n));
  const long double real_optimum = std::numbers::pi_v<long double> / (4.0L * theta) - 0.5L;
  return static_cast<std::uint64_t>(std::floor(real_optimum + 0.5L));
}

/// Mean queries of repeat-until-verified search: each attempt costs j + 1
/// and succeeds with probability p, so the count is geometric.
inline double expected_known_t_queries(std::size_t n, std::size_t t) {
  const auto j = nearest_optimal_iterations(n, t);
  return static_cast<double>((j + 1) / marked_mass(n, t, j));
}

/// Probability that k distinct inputs of a uniformly random two-to-one
/// function on N points contain no collision: prod_{i<k} (N - 2i)/(N - i).
inline double no_collision_probability(std::size_t n, std::size_t k) {
  long double p = 1.0L;
  for (std::size_t i = 0; i < k; ++i) p *= static_cast<long double>(n - 2 * i) / (n - i);
  return static_cast<double>(p);
}

}  // namespace qcollide::testing
