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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qcollide/baseline.hpp"

namespace qcollide {

enum class Algorithm { kBirthday, kSimple, kBht, kGeneralized, kClawBijective, kClawRToOne };

/// CLI/CSV token: birthday, simple, bht, generalized, claw-bij, claw-r.
std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view token);

/// One trial. total_queries = f_queries + g_queries; success means the
/// solver returned a pair and the pair checks out against the true mapping.
struct ExperimentRecord {
  Algorithm algorithm = Algorithm::kBht;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  bool success = false;
  std::uint64_t f_queries = 0;
  std::uint64_t g_queries = 0;
  std::uint64_t total_queries = 0;
  std::size_t table_space = 0;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// An invalid sweep or run configuration (CLI exit code 1).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A batch of trials over a grid of domain sizes and table sizes.
 *
 * `r` is the preimage count of the generated functions; for `generalized`
 * it sets the codomain to N/r and for `claw-bij` it is ignored (always 1).
 * An empty k_grid selects the cube-root policy ceil((N/r)^(1/3)).
 * birthday and simple derive their table size and ignore k_grid.
 */
struct SweepConfig {
  Algorithm algorithm = Algorithm::kBht;
  std::vector<std::size_t> n_grid;
  std::size_t r = 2;
  std::vector<std::size_t> k_grid;
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  double birthday_c = kBirthdayConstant;
  unsigned threads = 0;  ///< 0 = hardware concurrency
  std::filesystem::path output;
};

/// Throws ConfigError describing the first problem found.
void validate(const SweepConfig& config);

/// Table sizes run at domain size n, in grid order.
std::vector<std::size_t> table_sizes(const SweepConfig& config, std::size_t n);

/// base_seed XOR a stable hash of (algorithm, N, r, k, trial).
std::uint64_t trial_seed(std::uint64_t base_seed, Algorithm algorithm, std::size_t n,
                         std::size_t r, std::size_t k, std::size_t trial);

/**
 * Runs one trial on fresh oracles built from `seed` and audits it: the
 * reported query counts must equal the oracle counter deltas (a mismatch
 * throws std::logic_error). Solver give-ups become success = false rows.
 */
ExperimentRecord run_trial(Algorithm algorithm, std::size_t n, std::size_t r, std::size_t k,
                           std::uint64_t seed, std::size_t trial,
                           double birthday_c = kBirthdayConstant);

/// All trials of the sweep ordered by (N, k, trial). Trials run on a thread
/// pool; the result does not depend on the thread count.
std::vector<ExperimentRecord> run_trials(const SweepConfig& config);

inline constexpr std::string_view kCsvHeader =
    "algorithm,N,r,k,seed,trial,success,f_queries,g_queries,total_queries,table_space";

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records);

/// Malformed input throws AnalysisInputError.
std::vector<ExperimentRecord> read_csv(std::istream& in);

}  // namespace qcollide
