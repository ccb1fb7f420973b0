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

#include "qcollide/collision.hpp"

#include <stdexcept>

namespace qcollide {

namespace {

// H(x) = 1 iff F(x) appears in L under a different input.
FunctionSearch partner_search(BlackBoxFunction& f, const PairTable& table) {
  return FunctionSearch(f, [&table](Element x, Value fx) {
    const auto x0 = lookup_by_image(table, fx);
    return x0.has_value() && *x0 != x;
  });
}

CollisionResult from_internal(const Collision& c, std::uint64_t build, std::size_t space) {
  CollisionResult result;
  result.pair = c;
  result.phases.table_build = build;
  result.total_queries = build;
  result.table_space = space;
  return result;
}

// Step 5: one more evaluation of F(x1), then a free lookup in L.
Collision finish(BlackBoxFunction& f, const PairTable& table, Element x1, PhaseQueries& phases) {
  const Value y = f.eval(x1);
  ++phases.finishing;
  const auto x0 = lookup_by_image(table, y);
  if (!x0 || *x0 == x1) throw std::logic_error("verified search result has no partner in L");
  return {*x0, x1};
}

}  // namespace

std::size_t default_table_size(std::size_t n, std::size_t r) {
  if (n == 0 || r == 0) throw std::invalid_argument("need N >= 1 and r >= 1");
  std::size_t k = 1;
  while (k * k * k * r < n) ++k;
  return k;
}

CollisionResult simple_quantum_collision(BlackBoxFunction& f, Rng& rng) {
  if (f.domain_size() < 2) throw std::invalid_argument("collision search needs N >= 2");
  const Element x0 = 0;
  const Value y0 = f.eval(x0);

  FunctionSearch search(f, [x0, y0](Element x, Value fx) { return x != x0 && fx == y0; });
  const SearchOutcome outcome = grover_search_known_t(search, 1, rng);

  CollisionResult result;
  result.pair = Collision{x0, *outcome.found};
  result.phases.table_build = 1;
  result.phases.grover = outcome.oracle_queries;
  result.total_queries = result.phases.total();
  result.table_space = 1;
  return result;
}

CollisionResult bht_collision(BlackBoxFunction& f, std::size_t k, std::size_t r, Rng& rng) {
  const std::size_t n = f.domain_size();
  if (k < 1 || k > n) throw std::invalid_argument("table size k must be in [1, N]");
  if (r < 2) throw std::invalid_argument("collision search needs r >= 2");

  const auto subset = choose_subset_arbitrary(n, k);
  const PairTable table = build_table(f, subset);
  if (auto c = find_internal_collision(table)) return from_internal(*c, k, k);

  auto search = partner_search(f, table);
  const SearchOutcome outcome = grover_search_known_t(search, (r - 1) * k, rng);

  CollisionResult result;
  result.phases.table_build = k;
  result.phases.grover = outcome.oracle_queries;
  result.pair = finish(f, table, *outcome.found, result.phases);
  result.total_queries = result.phases.total();
  result.table_space = k;
  return result;
}

CollisionResult generalized_collision(BlackBoxFunction& f, std::size_t k, Rng& rng,
                                      const BBHTConfig& config) {
  const std::size_t n = f.domain_size();
  if (k < 1 || k > n) throw std::invalid_argument("table size k must be in [1, N]");

  const auto subset = choose_subset_random(n, k, rng);
  const PairTable table = build_table(f, subset);
  if (auto c = find_internal_collision(table)) return from_internal(*c, k, k);

  auto search = partner_search(f, table);
  CollisionResult result;
  result.phases.table_build = k;
  result.table_space = k;
  try {
    const SearchOutcome outcome = bbht_search(search, rng, config);
    result.phases.grover = outcome.oracle_queries;
    result.pair = finish(f, table, *outcome.found, result.phases);
  } catch (const SearchExhausted& e) {
    result.phases.grover = e.outcome().oracle_queries;
  }
  result.total_queries = result.phases.total();
  return result;
}

}  // namespace qcollide
