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

#include "qcollide/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace qcollide {

namespace {

template <typename Key>
std::vector<GroupStats> group(std::span<const ExperimentRecord> records, Key key) {
  std::map<std::size_t, std::vector<const ExperimentRecord*>> groups;
  for (const auto& r : records) groups[key(r)].push_back(&r);

  std::vector<GroupStats> out;
  for (const auto& [k, rows] : groups) {
    GroupStats g;
    g.key = k;
    g.trials = rows.size();
    double sum = 0.0, sum_sq = 0.0, space = 0.0, sum_success = 0.0;
    for (const auto* r : rows) {
      const auto q = static_cast<double>(r->total_queries);
      sum += q;
      sum_sq += q * q;
      space += static_cast<double>(r->table_space);
      if (r->success) {
        ++g.successes;
        sum_success += q;
      }
    }
    const double n = static_cast<double>(g.trials);
    g.mean_queries = sum / n;
    g.mean_space = space / n;
    if (g.trials > 1) {
      const double var = std::max(0.0, (sum_sq - n * g.mean_queries * g.mean_queries) / (n - 1));
      g.stderr_queries = std::sqrt(var / n);
    }
    if (g.successes > 0) g.mean_queries_success = sum_success / static_cast<double>(g.successes);
    out.push_back(g);
  }
  return out;
}

void require_single_point(std::span<const ExperimentRecord> records) {
  if (records.empty()) throw AnalysisInputError("no records");
  for (const auto& r : records) {
    if (r.n != records.front().n) throw AnalysisInputError("records mix several N values");
    if (r.r != records.front().r) throw AnalysisInputError("records mix several r values");
  }
}

}  // namespace

std::vector<GroupStats> group_by_n(std::span<const ExperimentRecord> records) {
  return group(records, [](const ExperimentRecord& r) { return r.n; });
}

std::vector<GroupStats> group_by_k(std::span<const ExperimentRecord> records) {
  return group(records, [](const ExperimentRecord& r) { return r.k; });
}

ScalingFit fit_loglog(std::span<const ScalingPoint> points) {
  if (points.size() < 2) throw AnalysisInputError("a fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    if (!(p.n > 0.0 && p.mean_queries > 0.0))
      throw AnalysisInputError("log-log fit needs positive values");
    const double x = std::log2(p.n);
    const double y = std::log2(p.mean_queries);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw AnalysisInputError("log-log fit needs distinct N values");
  ScalingFit fit;
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  return fit;
}

ScalingFit fit_scaling_exponent(std::span<const ExperimentRecord> records, std::size_t min_trials) {
  const auto groups = group_by_n(records);
  if (groups.size() < 3) throw AnalysisInputError("scaling fit needs >= 3 distinct N values");
  std::vector<ScalingPoint> points;
  for (const auto& g : groups) {
    if (g.trials < min_trials)
      throw AnalysisInputError("N = " + std::to_string(g.key) + " has only " +
                               std::to_string(g.trials) + " trials");
    points.push_back({static_cast<double>(g.key), g.mean_queries});
  }
  return fit_loglog(points);
}

TradeoffReport tradeoff_frontier(std::size_t n, std::size_t image_size,
                                 std::span<const TradeoffPoint> points) {
  if (points.empty()) throw AnalysisInputError("no grid points");
  TradeoffReport report;
  report.n = n;
  report.image_size = image_size;
  report.min_ratio = std::numeric_limits<double>::infinity();
  const auto image = static_cast<double>(image_size);
  for (TradeoffPoint p : points) {
    p.ratio = p.space * p.queries * p.queries / image;
    const double t_high = p.queries + 3.0 * p.queries_stderr;
    p.violation = p.space * t_high * t_high < image;
    report.min_ratio = std::min(report.min_ratio, p.ratio);
    report.any_violation = report.any_violation || p.violation;
    report.points.push_back(p);
  }
  return report;
}

TradeoffReport tradeoff_check(std::span<const ExperimentRecord> records) {
  require_single_point(records);
  const std::size_t n = records.front().n;
  const std::size_t r = std::max<std::size_t>(records.front().r, 1);
  std::vector<TradeoffPoint> points;
  for (const auto& g : group_by_k(records)) {
    TradeoffPoint p;
    p.k = g.key;
    p.space = g.mean_space;
    p.queries = g.mean_queries;
    p.queries_stderr = g.stderr_queries;
    points.push_back(p);
  }
  return tradeoff_frontier(n, n / r, points);
}

OptimalKReport optimal_k(std::size_t n, std::size_t r, std::span<const KCost> grid) {
  if (grid.size() < 5) throw AnalysisInputError("optimal-k needs at least 5 table sizes");
  if (r == 0) throw AnalysisInputError("r must be positive");
  OptimalKReport report;
  report.cube_root = std::cbrt(static_cast<double>(n) / static_cast<double>(r));

  const auto [lo, hi] = std::ranges::minmax(grid, {}, &KCost::k);
  if (static_cast<double>(lo.k) > report.cube_root || static_cast<double>(hi.k) < report.cube_root)
    throw AnalysisInputError("k grid does not span (N/r)^(1/3)");

  const auto best = std::ranges::min_element(grid, {}, &KCost::cost);
  report.argmin_k = best->k;
  report.mean_queries = best->cost;
  report.ratio = static_cast<double>(best->k) / report.cube_root;
  return report;
}

OptimalKReport optimal_k_report(std::span<const ExperimentRecord> records) {
  require_single_point(records);
  std::vector<KCost> grid;
  for (const auto& g : group_by_k(records)) grid.push_back({g.key, g.mean_queries});
  return optimal_k(records.front().n, records.front().r, grid);
}

double runtime_cost_model(std::size_t k, std::size_t n, std::size_t r, double t_eval,
                          double log_base_cost) {
  const double kd = static_cast<double>(k);
  const double evaluations = kd + std::sqrt(static_cast<double>(n) / (kd * static_cast<double>(r)));
  return evaluations * (t_eval + log_base_cost * std::log2(std::max(kd, 2.0)));
}

}  // namespace qcollide
