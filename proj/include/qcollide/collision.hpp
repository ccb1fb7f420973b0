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

#include <cstddef>
#include <cstdint>
#include <optional>

#include "qcollide/grover.hpp"
#include "qcollide/oracle.hpp"
#include "qcollide/random.hpp"
#include "qcollide/table.hpp"

namespace qcollide {

/// Evaluations of F spent in each phase of a collision search.
struct PhaseQueries {
  std::uint64_t table_build = 0;
  std::uint64_t grover = 0;
  std::uint64_t finishing = 0;

  std::uint64_t total() const noexcept { return table_build + grover + finishing; }
};

struct CollisionResult {
  std::optional<Collision> pair;  ///< empty when the search reported failure
  std::uint64_t total_queries = 0;
  std::size_t table_space = 0;
  PhaseQueries phases;

  bool found() const noexcept { return pair.has_value(); }
};

/// Smallest k with k^3 >= N / r, the table size balancing both phases.
std::size_t default_table_size(std::size_t n, std::size_t r);

/**
 * Fix x0 = 0 and Grover-search the other preimage of F(x0) (t = 1).
 * F(x0) is evaluated once and reused by every H call. Constant space.
 * Requires a two-to-one F; a search cutoff propagates as SearchExhausted.
 */
CollisionResult simple_quantum_collision(BlackBoxFunction& f, Rng& rng);

/**
 * Table-plus-search collision finding for an exactly r-to-one F.
 *
 *  1. K = {0..k-1}; L = sorted (x, F(x)) for x in K   (k evaluations)
 *  2. a collision inside L is returned directly
 *  3. otherwise search H(x) = [some x0 in K has F(x0) = F(x), x != x0],
 *     which has exactly (r-1)k solutions, with the known-t search
 *  4. re-evaluate F(x1) to look up its partner x0 in L (one evaluation)
 *
 * Throws std::invalid_argument when k is outside [1, N] or r < 2.
 */
CollisionResult bht_collision(BlackBoxFunction& f, std::size_t k, std::size_t r, Rng& rng);

/**
 * The same steps for an arbitrary F with a small image: K is a uniform
 * random k-subset and the search phase uses bbht_search, since the number
 * of solutions is not known. An exhausted budget yields a result with no
 * pair and the queries spent; retrying is up to the caller.
 */
CollisionResult generalized_collision(BlackBoxFunction& f, std::size_t k, Rng& rng,
                                      const BBHTConfig& config);

}  // namespace qcollide
