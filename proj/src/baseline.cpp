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

#include "qcollide/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcollide/table.hpp"

namespace qcollide {

std::size_t birthday_table_size(std::size_t n, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("birthday constant must be positive");
  const double k = std::ceil(c * std::sqrt(static_cast<double>(n)));
  return std::min(static_cast<std::size_t>(k), n);
}

CollisionResult birthday_collision(BlackBoxFunction& f, double c, Rng& rng) {
  const std::size_t n = f.domain_size();
  const std::size_t k = birthday_table_size(n, c);

  const PairTable table = build_table(f, choose_subset_random(n, k, rng));
  CollisionResult result;
  result.pair = find_internal_collision(table);
  result.phases.table_build = k;
  result.total_queries = k;
  result.table_space = k;
  return result;
}

}  // namespace qcollide
