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

#include "qcollide/table.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace qcollide {

PairTable::PairTable(std::vector<TableEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("table must not be empty");
  std::ranges::sort(entries_);
  std::vector<Element> xs(entries_.size());
  std::ranges::transform(entries_, xs.begin(), &TableEntry::x);
  std::ranges::sort(xs);
  if (std::ranges::adjacent_find(xs) != xs.end())
    throw std::invalid_argument("table inputs must be distinct");
}

std::vector<Element> choose_subset_arbitrary(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("subset size must be in [1, N]");
  std::vector<Element> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<Element>(i);
  return subset;
}

std::vector<Element> choose_subset_random(std::size_t n, std::size_t k, Rng& rng) {
  if (k < 1 || k > n) throw std::invalid_argument("subset size must be in [1, N]");
  // Floyd's sampling: for each j in [N-k, N) add a uniform draw from [0, j],
  // or j itself if the draw is already taken.
  std::unordered_set<Element> chosen;
  chosen.reserve(2 * k);
  for (std::size_t j = n - k; j < n; ++j) {
    const auto draw = std::uniform_int_distribution<std::size_t>(0, j)(rng);
    const auto pick = static_cast<Element>(draw);
    if (!chosen.insert(pick).second) chosen.insert(static_cast<Element>(j));
  }
  std::vector<Element> subset(chosen.begin(), chosen.end());
  std::ranges::sort(subset);
  return subset;
}

SelectionExhausted::SelectionExhausted(std::uint64_t candidates)
    : std::runtime_error("distinct-image selection exhausted after " +
                         std::to_string(candidates) + " candidates"),
      candidates_(candidates) {}

DistinctImageSelection choose_subset_distinct_images(BlackBoxFunction& f, std::size_t k, Rng& rng) {
  return choose_subset_distinct_images(f, k, rng, 20 * static_cast<std::uint64_t>(k));
}

DistinctImageSelection choose_subset_distinct_images(BlackBoxFunction& f, std::size_t k, Rng& rng,
                                                     std::uint64_t try_cap) {
  if (k < 1 || 2 * k > f.codomain_size())
    throw std::invalid_argument("distinct-image selection needs 1 <= k <= |Z|/2");

  const std::size_t n = f.domain_size();
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::unordered_set<Element> seen;
  std::unordered_set<Value> images;
  DistinctImageSelection out;
  out.pairs.reserve(k);

  while (out.pairs.size() < k) {
    if (out.candidates >= try_cap || seen.size() == n) throw SelectionExhausted(out.candidates);
    const Element x = pick(rng);
    if (!seen.insert(x).second) continue;
    const Value y = f.eval(x);
    ++out.candidates;
    if (images.insert(y).second) out.pairs.push_back({x, y});
  }
  return out;
}

PairTable build_table(BlackBoxFunction& f, std::span<const Element> subset) {
  std::vector<TableEntry> entries;
  entries.reserve(subset.size());
  for (Element x : subset) entries.push_back({x, f.eval(x)});
  return PairTable(std::move(entries));
}

std::optional<Collision> find_internal_collision(const PairTable& table) {
  auto e = table.entries();
  auto it = std::ranges::adjacent_find(e, {}, &TableEntry::y);
  if (it == e.end()) return std::nullopt;
  return Collision{it->x, std::next(it)->x};
}

std::optional<Element> lookup_by_image(const PairTable& table, Value y) {
  auto e = table.entries();
  auto it = std::ranges::lower_bound(e, y, {}, &TableEntry::y);
  if (it == e.end() || it->y != y) return std::nullopt;
  return it->x;
}

}  // namespace qcollide
