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
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace qcollide {

using Element = std::uint32_t;  ///< A point of a function's domain.
using Value = std::uint32_t;    ///< A point of a function's codomain.

/// Largest domain any constructor accepts; functions are fully materialized.
inline constexpr std::size_t kMaxDomainSize = std::size_t{1} << 24;

/**
 * A finite function {0..N-1} -> {0..M-1} that can only be observed by
 * evaluating it. Every evaluation is counted; the count is the cost measure
 * of every algorithm in this library.
 *
 * Solvers get a reference to this class and nothing else. Looking at the
 * mapping without paying for it is reserved to `Introspection`, which only
 * the simulator backend and test/harness code use.
 */
class BlackBoxFunction {
 public:
  BlackBoxFunction(std::vector<Value> mapping, std::size_t codomain_size);

  /// Classical evaluation. Out-of-range input throws std::out_of_range.
  Value eval(Element x);

  /// Charges `count` evaluations made by a quantum phase oracle acting on a
  /// superposition. Each Grover iteration queries the function once.
  void superposed_eval(std::uint64_t count = 1) noexcept { evaluations_ += count; }

  std::size_t domain_size() const noexcept { return mapping_.size(); }
  std::size_t codomain_size() const noexcept { return codomain_size_; }
  std::uint64_t evaluations() const noexcept { return evaluations_; }

 private:
  friend class Introspection;

  std::vector<Value> mapping_;
  std::size_t codomain_size_;
  std::uint64_t evaluations_ = 0;
};

/// Uncounted read access to a black box. Never hand this to a solver.
class Introspection {
 public:
  static Value peek(const BlackBoxFunction& f, Element x) { return f.mapping_.at(x); }
  static std::span<const Value> mapping(const BlackBoxFunction& f) noexcept {
    return f.mapping_;
  }
};

struct FunctionProfile {
  std::map<Value, std::size_t> multiplicity;  ///< image value -> preimage count
  std::size_t image_size = 0;
};

/// Exact multiplicity histogram. Does not touch the evaluation counter.
FunctionProfile profile(const BlackBoxFunction& f);

/// Exactly r-to-one function with N/r image values. Preimage blocks form a
/// uniformly random partition of the domain and their labels a random
/// bijection onto {0..N/r-1}, both determined by `seed`.
BlackBoxFunction make_r_to_one(std::size_t n, std::size_t r, std::uint64_t seed);

/// Independent uniform image in {0..m-1} for every input. Requires m <= n.
BlackBoxFunction make_arbitrary_small_image(std::size_t n, std::size_t m, std::uint64_t seed);

struct ClawPair {
  BlackBoxFunction f;
  BlackBoxFunction g;
};

/// Two independent r-to-one functions onto the common codomain {0..N/r-1}.
/// With r = 1 both are permutations.
ClawPair make_claw_pair(std::size_t n, std::size_t r, std::uint64_t seed);

}  // namespace qcollide
