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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qcollide/oracle.hpp"
#include "qcollide/random.hpp"

namespace qcollide {

struct TableEntry {
  Element x;
  Value y;

  // Sorted by image first; ties by input.
  friend constexpr auto operator<=>(const TableEntry& a, const TableEntry& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  friend constexpr bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Two distinct inputs with equal images.
struct Collision {
  Element first;
  Element second;
};

/**
 * The table L of evaluated pairs (x, F(x)), sorted by image. Its size is the
 * space resource of the table-based algorithms. Immutable once built.
 */
class PairTable {
 public:
  /// Sorts `entries`. Throws std::invalid_argument on an empty table or a
  /// repeated x.
  explicit PairTable(std::vector<TableEntry> entries);

  std::span<const TableEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<TableEntry> entries_;
};

/// The arbitrary subset used where any fixed choice will do: {0, ..., k-1}.
std::vector<Element> choose_subset_arbitrary(std::size_t n, std::size_t k);

/// Uniform random k-subset of {0..N-1}, returned in ascending order.
std::vector<Element> choose_subset_random(std::size_t n, std::size_t k, Rng& rng);

/// Thrown when distinct-image selection runs out of candidates.
class SelectionExhausted : public std::runtime_error {
 public:
  explicit SelectionExhausted(std::uint64_t candidates);
  std::uint64_t candidates() const noexcept { return candidates_; }

 private:
  std::uint64_t candidates_;
};

struct DistinctImageSelection {
  std::vector<TableEntry> pairs;  ///< accepted (x, F(x)), in draw order
  std::uint64_t candidates = 0;   ///< evaluations spent, accepted or rejected
};

/**
 * Draws random inputs until k of them have pairwise distinct images.
 *
 * Every candidate costs one evaluation; an input already evaluated is never
 * evaluated again. Requires k <= codomain_size / 2. Throws SelectionExhausted
 * after `try_cap` evaluations (default 20k) without reaching k.
 */
DistinctImageSelection choose_subset_distinct_images(BlackBoxFunction& f, std::size_t k, Rng& rng,
                                                     std::uint64_t try_cap);
DistinctImageSelection choose_subset_distinct_images(BlackBoxFunction& f, std::size_t k, Rng& rng);

/// Evaluates f once per element of `subset` and sorts the result.
PairTable build_table(BlackBoxFunction& f, std::span<const Element> subset);

/// Adjacent equal-image pair with the lowest image, then lowest inputs.
std::optional<Collision> find_internal_collision(const PairTable& table);

/// Binary search for an entry with image y. Lowest x if several match.
std::optional<Element> lookup_by_image(const PairTable& table, Value y);

}  // namespace qcollide
