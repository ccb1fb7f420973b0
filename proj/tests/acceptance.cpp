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

// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qcollide/analysis.hpp"
#include "qcollide/baseline.hpp"
#include "qcollide/claw.hpp"
#include "qcollide/collision.hpp"
#include "qcollide/grover.hpp"
#include "qcollide/harness.hpp"
#include "qcollide/table.hpp"
#include "test_support.hpp"

using namespace qcollide;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::vector<Element> random_marked(std::size_t n, std::size_t t, Rng& rng) {
  std::set<Element> s;
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  while (s.size() < t) s.insert(pick(rng));
  return {s.begin(), s.end()};
}

std::vector<ExperimentRecord> concat_sweeps(Algorithm a, std::size_t r,
                                            const std::vector<std::size_t>& ns,
                                            const std::function<std::vector<std::size_t>(std::size_t)>& ks,
                                            std::size_t trials, std::uint64_t seed) {
  std::vector<ExperimentRecord> all;
  for (std::size_t n : ns) {
    SweepConfig c;
    c.algorithm = a;
    c.n_grid = {n};
    c.r = r;
    c.k_grid = ks(n);
    c.trials = trials;
    c.base_seed = seed;
    auto part = run_trials(c);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::string csv_of(const std::vector<ExperimentRecord>& records) {
  std::ostringstream os;
  write_csv(os, records);
  return os.str();
}

// Shared between criteria 4 and 10.
std::vector<ExperimentRecord> k_sweep_records;

Verdict grover_exactness() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng = make_rng(1);
  double worst = 0.0;
  std::size_t comparisons = 0;
  for (unsigned n = 2; n <= 10; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    for (int set = 0; set < 20; ++set) {
      const std::size_t t = std::uniform_int_distribution<std::size_t>(1, dim / 2)(rng);
      GroverStatevector sv(n, random_marked(dim, t, rng));
      const auto jmax = 3 * optimal_iterations(dim, t);
      for (std::uint64_t j = 0; j <= jmax; ++j) {
        worst = std::max(worst, std::abs(sv.marked_probability() - success_probability(dim, t, j)));
        ++comparisons;
        sv.iterate();
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-10 && secs < 60.0,
          fmt("max |engine - statevector| = %.3g over %zu points (tol 1e-10), %.2fs (limit 60s)",
              worst, comparisons, secs)};
}

Verdict spot_values() {
  const double a = success_probability(4, 1, 1);
  const double b = success_probability(16, 4, 1);
  const std::vector<Element> m4{2}, m16{0, 5, 9, 14};
  const double ra = statevector_reference(m4, 2, 1);
  const double rb = statevector_reference(m16, 4, 1);
  const bool ok = std::abs(a - 1) <= 1e-12 && std::abs(b - 1) <= 1e-12 &&
                  std::abs(ra - 1) <= 1e-12 && std::abs(rb - 1) <= 1e-12;
  return {ok, fmt("P(4,1,1) = %.15f, P(16,4,1) = %.15f; state-vector %.15f, %.15f (tol 1e-12)", a,
                  b, ra, rb)};
}

Verdict collision_scaling() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::size_t> ns{1 << 10, 1 << 12, 1 << 14, 1 << 16, 1 << 18, 1 << 20};
  const auto records = concat_sweeps(
      Algorithm::kBht, 2, ns, [](std::size_t n) { return std::vector{default_table_size(n, 1)}; },
      200, 3);
  const auto fit = fit_scaling_exponent(records);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {fit.slope >= 0.28 && fit.slope <= 0.40 && secs < 300.0,
          fmt("slope = %.4f (want [0.28, 0.40]), 6 N values x 200 trials, %.1fs (limit 300s)",
              fit.slope, secs)};
}

Verdict optimal_table_size() {
  k_sweep_records = concat_sweeps(
      Algorithm::kBht, 2, {1 << 18},
      [](std::size_t) { return std::vector<std::size_t>{4, 8, 16, 32, 64, 128, 256, 512}; }, 200,
      4);
  const auto report = optimal_k_report(k_sweep_records);
  const bool ok = report.ratio >= 0.5 && report.ratio <= 2.0;
  std::string means;
  for (const auto& g : group_by_k(k_sweep_records)) means += fmt(" %zu:%.1f", g.key, g.mean_queries);
  return {ok, fmt("argmin k = %zu, (N/r)^(1/3) = %.1f, ratio %.3f (want [0.5, 2]); means%s",
                  report.argmin_k, report.cube_root, report.ratio, means.c_str())};
}

Verdict birthday_rate() {
  SweepConfig c;
  c.algorithm = Algorithm::kBirthday;
  c.n_grid = {10000};
  c.r = 2;
  c.trials = 2000;
  c.base_seed = 5;
  std::size_t successes = 0;
  for (const auto& r : run_trials(c)) successes += r.success;
  const double rate = static_cast<double>(successes) / 2000.0;
  return {rate >= 0.45, fmt("success frequency %.4f over 2000 trials, k = 118 (want >= 0.45)", rate)};
}

Verdict exact_accounting() {
  Rng pick = make_rng(6);
  std::size_t runs = 0, mismatches = 0, invalid = 0, reported = 0;
  for (std::size_t i = 0; i < 10000; ++i) {
    const auto algorithm = static_cast<Algorithm>(i % 6);
    const std::size_t n = std::size_t{1} << std::uniform_int_distribution<int>(6, 12)(pick);
    const std::size_t r = std::size_t{1} << std::uniform_int_distribution<int>(1, 3)(pick);
    const std::uint64_t seed = pick();
    Rng rng = make_rng(seed, 1);
    ++runs;
    if (algorithm == Algorithm::kClawBijective || algorithm == Algorithm::kClawRToOne) {
      const bool bij = algorithm == Algorithm::kClawBijective;
      auto p = make_claw_pair(n, bij ? 1 : r, seed);
      const std::size_t k = bij ? default_table_size(n, 1) : std::max<std::size_t>(1, default_table_size(n, r) / 2);
      const auto c = bij ? claw_bijective(p.f, p.g, k, rng) : claw_r_to_one(p.f, p.g, k, r, rng);
      mismatches += c.f_queries != p.f.evaluations() || c.g_queries != p.g.evaluations();
      invalid += Introspection::peek(p.f, c.x) != Introspection::peek(p.g, c.y);
      ++reported;
      continue;
    }
    const bool two_to_one = algorithm == Algorithm::kSimple || algorithm == Algorithm::kBirthday;
    BlackBoxFunction f = algorithm == Algorithm::kGeneralized
                             ? make_arbitrary_small_image(n, n / r, seed)
                             : make_r_to_one(n, two_to_one ? 2 : r, seed);
    CollisionResult res;
    switch (algorithm) {
      case Algorithm::kBirthday: res = birthday_collision(f, kBirthdayConstant, rng); break;
      case Algorithm::kSimple: res = simple_quantum_collision(f, rng); break;
      case Algorithm::kBht: res = bht_collision(f, default_table_size(n, r), r, rng); break;
      default: res = generalized_collision(f, default_table_size(n, r), rng, BBHTConfig::for_domain(n));
    }
    mismatches += res.total_queries != f.evaluations() || res.total_queries != res.phases.total();
    if (res.pair) {
      ++reported;
      invalid += res.pair->first == res.pair->second ||
                 Introspection::peek(f, res.pair->first) != Introspection::peek(f, res.pair->second);
    }
  }
  return {mismatches == 0 && invalid == 0,
          fmt("%zu runs: %zu counter mismatches, %zu invalid of %zu reported pairs", runs,
              mismatches, invalid, reported)};
}

Verdict claw_asymmetry() {
  constexpr std::size_t n = 1 << 15, k = 32;
  std::size_t wrong_f = 0;
  double g_total = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto p = make_claw_pair(n, 1, 7000 + seed);
    Rng rng = make_rng(seed, 1);
    const auto c = claw_bijective(p.f, p.g, k, rng);
    wrong_f += c.f_queries != k + 1 || p.f.evaluations() != k + 1;
    g_total += static_cast<double>(c.g_queries);
  }
  const double mean_g = g_total / 500;
  const double predicted = testing::expected_known_t_queries(n, k) + 1;
  const bool ok = wrong_f == 0 && mean_g >= predicted / 2 && mean_g <= predicted * 2;
  return {ok, fmt("f_queries != 33 on %zu of 500 runs; mean g_queries %.2f vs predicted %.2f "
                  "(want within x2)", wrong_f, mean_g, predicted)};
}

Verdict claw_selection() {
  constexpr std::size_t n = 1 << 15, r = 2, k = 26;
  double selection_total = 0;
  std::size_t wrong_t = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto p = make_claw_pair(n, r, 8000 + seed);
    Rng rng = make_rng(seed, 1);

    // Replay the selection on an uncounted copy to recover K.
    BlackBoxFunction f_copy = p.f;
    Rng replay = rng;
    const auto sel = choose_subset_distinct_images(f_copy, k, replay);
    std::set<Value> images;
    for (const auto& e : sel.pairs) images.insert(e.y);
    std::size_t marked = 0;
    for (Value gy : Introspection::mapping(p.g)) marked += images.count(gy);

    const auto c = claw_r_to_one(p.f, p.g, k, r, rng);
    wrong_t += marked != k * r || c.selection_queries != sel.candidates;
    selection_total += static_cast<double>(c.selection_queries);
  }
  const double mean = selection_total / 500;
  return {mean < 2.0 * k && wrong_t == 0,
          fmt("mean selection evaluations %.3f (want < 52); marked count != 52 on %zu of 500",
              mean, wrong_t)};
}

Verdict bbht_expectation() {
  constexpr std::size_t n = 1 << 14;
  bool ok = true;
  std::string detail;
  for (std::size_t t : {1u, 4u, 16u}) {
    Rng rng = make_rng(9 + t);
    const auto marked = random_marked(n, t, rng);
    double total = 0;
    for (int i = 0; i < 1000; ++i) {
      PlantedSearch oracle(n, marked);
      total += static_cast<double>(bbht_search(oracle, rng, BBHTConfig::for_domain(n)).oracle_queries);
    }
    const double mean = total / 1000;
    const double bound = 4.5 * std::sqrt(double(n) / double(t)) * 1.2;
    ok = ok && mean <= bound;
    detail += fmt("t=%zu: mean %.1f <= %.1f; ", t, mean, bound);
  }
  return {ok, detail};
}

Verdict frontier() {
  const auto report = tradeoff_check(k_sweep_records);
  return {!report.any_violation && !report.points.empty(),
          fmt("min S T^2 / |F(X)| = %.3f over %zu k values, |F(X)| = %zu; violations: %s",
              report.min_ratio, report.points.size(), report.image_size,
              report.any_violation ? "yes" : "none")};
}

Verdict determinism() {
  std::size_t sweeps = 0, differing = 0;
  for (int a = 0; a < 6; ++a) {
    SweepConfig c;
    c.algorithm = static_cast<Algorithm>(a);
    c.n_grid = {1 << 10, 1 << 12};
    c.r = 4;
    if (c.algorithm == Algorithm::kSimple || c.algorithm == Algorithm::kBirthday) c.r = 2;
    c.trials = 50;
    c.base_seed = 11;
    const auto first = csv_of(run_trials(c));
    c.threads = 3;
    const auto second = csv_of(run_trials(c));
    ++sweeps;
    differing += first != second;
  }
  return {differing == 0, fmt("%zu of %zu repeated sweeps differ byte-wise", differing, sweeps)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Verdict (*)()>> criteria = {
      {"1  Grover engine exactness", grover_exactness},
      {"2  closed-form spot values", spot_values},
      {"3  collision query scaling ~ N^(1/3)", collision_scaling},
      {"4  optimal table size", optimal_table_size},
      {"5  birthday baseline", birthday_rate},
      {"6  exact accounting", exact_accounting},
      {"7  bijective claw asymmetry", claw_asymmetry},
      {"8  distinct-image selection bound", claw_selection},
      {"9  unknown-t search expectation", bbht_expectation},
      {"10 space-time frontier", frontier},
      {"11 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
