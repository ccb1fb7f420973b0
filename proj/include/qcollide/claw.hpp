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

#include "qcollide/oracle.hpp"
#include "qcollide/random.hpp"

namespace qcollide {

struct ClawResult {
  Element x = 0;  ///< input of F
  Element y = 0;  ///< input of G, with F(x) = G(y)
  std::uint64_t f_queries = 0;
  std::uint64_t g_queries = 0;
  std::uint64_t selection_queries = 0;  ///< F evaluations spent choosing K
  std::size_t table_space = 0;
};

/**
 * Claw finding for two bijections onto a common codomain.
 *
 * K = {0..k-1} is tabulated under F (k evaluations). H(y) = [G(y) is in L]
 * has exactly k solutions over G's domain and is found with the known-t
 * search, one G evaluation per H call. Finishing costs one G evaluation to
 * recover G(y0) for the lookup and one F evaluation confirming
 * F(x0) = G(y0), so f_queries = k + 1 on every run.
 */
ClawResult claw_bijective(BlackBoxFunction& f, BlackBoxFunction& g, std::size_t k, Rng& rng);

/**
 * Claw finding for two r-to-one functions with N = r |Z|. K is drawn at
 * random until its k images under F are distinct, so H has exactly k r
 * solutions. Requires 1 <= k <= N / (2r); a selection cap failure
 * propagates as SelectionExhausted.
 */
ClawResult claw_r_to_one(BlackBoxFunction& f, BlackBoxFunction& g, std::size_t k, std::size_t r,
                         Rng& rng);

}  // namespace qcollide
