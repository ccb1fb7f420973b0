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
#include <span>
#include <stdexcept>
#include <vector>

#include "qcollide/harness.hpp"

namespace qcollide {

/// Records unfit for the requested analysis (CLI exit code 2).
class AnalysisInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Aggregate of the trials sharing one grid point.
struct GroupStats {
  std::size_t key = 0;  ///< N or k, depending on the grouping
  std::size_t trials = 0;
  std::size_t successes = 0;
  double mean_space = 0.0;
  double mean_queries = 0.0;          ///< all trials, failures included
  double stderr_queries = 0.0;
  double mean_queries_success = 0.0;  ///< successful trials only; 0 if none
};

std::vector<GroupStats> group_by_n(std::span<const ExperimentRecord> records);
std::vector<GroupStats> group_by_k(std::span<const ExperimentRecord> records);

struct ScalingPoint {
  double n;
  double mean_queries;
};

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares of log2(mean_queries) on log2(n).
ScalingFit fit_loglog(std::span<const ScalingPoint> points);

/// Fit over per-N means. Needs >= 3 distinct N with >= min_trials each.
ScalingFit fit_scaling_exponent(std::span<const ExperimentRecord> records,
                                std::size_t min_trials = 30);

struct TradeoffPoint {
  std::size_t k = 0;
  double space = 0.0;    ///< S, mean table entries
  double queries = 0.0;  ///< T, mean evaluations
  double queries_stderr = 0.0;
  double ratio = 0.0;    ///< S T^2 / |F(X)|
  bool violation = false;
};

struct TradeoffReport {
  std::size_t n = 0;
  std::size_t image_size = 0;
  std::vector<TradeoffPoint> points;
  double min_ratio = 0.0;
  bool any_violation = false;
};

/**
 * Checks S T^2 >= |F(X)| at every point. A point is flagged only when the
 * bound fails even with T raised by three standard errors.
 * Fills ratio/violation in the returned copies of `points`.
 */
TradeoffReport tradeoff_frontier(std::size_t n, std::size_t image_size,
                                 std::span<const TradeoffPoint> points);

/// Groups a k-sweep at one (N, r); |F(X)| is taken as N/r. Mixed N or r
/// throws AnalysisInputError.
TradeoffReport tradeoff_check(std::span<const ExperimentRecord> records);

struct KCost {
  std::size_t k;
  double cost;
};

struct OptimalKReport {
  std::size_t argmin_k = 0;
  double mean_queries = 0.0;
  double cube_root = 0.0;  ///< (N/r)^(1/3)
  double ratio = 0.0;      ///< argmin_k / cube_root
};

/// Grid argmin. Needs >= 5 points whose k range spans (N/r)^(1/3).
OptimalKReport optimal_k(std::size_t n, std::size_t r, std::span<const KCost> grid);
OptimalKReport optimal_k_report(std::span<const ExperimentRecord> records);

/// (k + sqrt(N/(k r))) (T_eval + log_base_cost log2 max(k, 2)).
double runtime_cost_model(std::size_t k, std::size_t n, std::size_t r, double t_eval,
                          double log_base_cost);

}  // namespace qcollide
