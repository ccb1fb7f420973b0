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

#include "qcollide/collision.hpp"
#include "qcollide/oracle.hpp"
#include "qcollide/random.hpp"

namespace qcollide {

/// Table size constant that gives a two-to-one function an internal
/// collision with probability about 1/2.
inline constexpr double kBirthdayConstant = 1.18;

/// min(ceil(c sqrt N), N).
std::size_t birthday_table_size(std::size_t n, double c);

/**
 * Classical birthday search: tabulate a uniform random subset of size
 * min(ceil(c sqrt N), N), sort it, and report an internal collision if one
 * exists. Costs exactly the table size in evaluations either way; on
 * failure the result carries no pair.
 */
CollisionResult birthday_collision(BlackBoxFunction& f, double c, Rng& rng);

}  // namespace qcollide
