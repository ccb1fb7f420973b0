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

#include "qcollide/claw.hpp"

#include <stdexcept>

#include "qcollide/grover.hpp"
#include "qcollide/table.hpp"

namespace qcollide {

namespace {

// Steps shared by both variants once L is built: search G's domain for an
// image stored in L, then look the partner up.
ClawResult search_and_finish(BlackBoxFunction& f, BlackBoxFunction& g, const PairTable& table,
                             std::size_t t, Rng& rng) {
  const std::uint64_t f_before = f.evaluations();
  const std::uint64_t g_before = g.evaluations();

  FunctionSearch search(g, [&table](Element, Value gy) {
    return lookup_by_image(table, gy).has_value();
  });
  const SearchOutcome outcome = grover_search_known_t(search, t, rng);
  const Element y0 = *outcome.found;

  const Value image = g.eval(y0);
  const auto x0 = lookup_by_image(table, image);
  if (!x0) throw std::logic_error("verified claw candidate has no partner in L");
  if (f.eval(*x0) != image) throw std::logic_error("confirmation F(x0) != G(y0) failed");

  ClawResult result;
  result.x = *x0;
  result.y = y0;
  result.f_queries = f.evaluations() - f_before;
  result.g_queries = g.evaluations() - g_before;
  result.table_space = table.size();
  return result;
}

void check_pair(const BlackBoxFunction& f, const BlackBoxFunction& g) {
  if (f.codomain_size() != g.codomain_size())
    throw std::invalid_argument("claw search needs a common codomain");
}

}  // namespace

ClawResult claw_bijective(BlackBoxFunction& f, BlackBoxFunction& g, std::size_t k, Rng& rng) {
  check_pair(f, g);
  const std::size_t n = f.domain_size();
  if (k < 1 || k > n) throw std::invalid_argument("table size k must be in [1, N]");

  const PairTable table = build_table(f, choose_subset_arbitrary(n, k));
  ClawResult result = search_and_finish(f, g, table, k, rng);
  result.f_queries += k;
  return result;
}

ClawResult claw_r_to_one(BlackBoxFunction& f, BlackBoxFunction& g, std::size_t k, std::size_t r,
                         Rng& rng) {
  check_pair(f, g);
  const std::size_t n = f.domain_size();
  if (r < 2) throw std::invalid_argument("r-to-one claw search needs r >= 2");
  if (k < 1 || 2 * r * k > n) throw std::invalid_argument("table size k must be in [1, N/(2r)]");

  auto selection = choose_subset_distinct_images(f, k, rng);
  const PairTable table(std::move(selection.pairs));
  ClawResult result = search_and_finish(f, g, table, k * r, rng);
  result.selection_queries = selection.candidates;
  result.f_queries += selection.candidates;
  return result;
}

}  // namespace qcollide
