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

// qcollide: run collision/claw-finding trials and analyze their CSV output.
//
//   qcollide run --algo bht --n 65536 --k-policy cube-root --trials 100 --seed 1 --out runs.csv
//   qcollide sweep --algo bht --n-grid 1024,4096,16384 --r 2 --trials 200 --seed 1 --out s.csv
//   qcollide analyze scaling --in s.csv
//
// Exit codes: 0 success, 1 invalid configuration, 2 unusable analysis input.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcollide/analysis.hpp"
#include "qcollide/harness.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitAnalysis = 2;

struct Options {
  std::string algo;
  std::size_t n = 0;
  std::vector<std::size_t> n_grid;
  std::size_t r = 2;
  std::size_t k = 0;
  std::string k_policy;
  std::vector<std::size_t> k_grid;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::string out;
  double c = qcollide::kBirthdayConstant;
  unsigned threads = 0;
  std::string mode;
  std::string in;
};

int write_records(const qcollide::SweepConfig& config) {
  const auto records = qcollide::run_trials(config);
  std::ofstream out(config.output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << config.output << " for writing\n";
    return kExitConfig;
  }
  qcollide::write_csv(out, records);
  std::size_t successes = 0;
  for (const auto& r : records) successes += r.success;
  std::cerr << "wrote " << records.size() << " records (" << successes << " successful) to "
            << config.output << '\n';
  return 0;
}

qcollide::SweepConfig make_config(const Options& o, bool single) {
  qcollide::SweepConfig config;
  const auto algorithm = qcollide::parse_algorithm(o.algo);
  if (!algorithm) throw qcollide::ConfigError("unknown algorithm '" + o.algo + "'");
  config.algorithm = *algorithm;
  config.n_grid = single ? std::vector<std::size_t>{o.n} : o.n_grid;
  config.r = o.r;
  if (single && o.k != 0) config.k_grid = {o.k};
  if (!single) config.k_grid = o.k_grid;
  if (!o.k_policy.empty() && o.k_policy != "cube-root")
    throw qcollide::ConfigError("unknown k policy '" + o.k_policy + "'");
  config.trials = o.trials;
  config.base_seed = o.seed;
  config.birthday_c = o.c;
  config.threads = o.threads;
  config.output = o.out;
  return config;
}

void print_groups(const std::vector<qcollide::GroupStats>& groups, const char* key) {
  std::cout << key << ",trials,successes,mean_space,mean_total_queries,stderr,"
                      "mean_total_queries_success\n";
  for (const auto& g : groups) {
    std::cout << g.key << ',' << g.trials << ',' << g.successes << ',' << g.mean_space << ','
              << g.mean_queries << ',' << g.stderr_queries << ',' << g.mean_queries_success
              << '\n';
  }
}

int analyze(const Options& o) {
  std::ifstream in(o.in, std::ios::binary);
  if (!in) throw qcollide::AnalysisInputError("cannot open " + o.in);
  const auto records = qcollide::read_csv(in);
  std::cout << std::setprecision(10);

  if (o.mode == "scaling") {
    print_groups(qcollide::group_by_n(records), "N");
    const auto fit = qcollide::fit_scaling_exponent(records);
    std::cout << "slope," << fit.slope << "\nintercept," << fit.intercept << '\n';
  } else if (o.mode == "tradeoff") {
    const auto report = qcollide::tradeoff_check(records);
    std::cout << "k,S,T,T_stderr,ST2_over_image,violation\n";
    for (const auto& p : report.points) {
      std::cout << p.k << ',' << p.space << ',' << p.queries << ',' << p.queries_stderr << ','
                << p.ratio << ',' << (p.violation ? 1 : 0) << '\n';
    }
    std::cout << "image_size," << report.image_size << "\nmin_ratio," << report.min_ratio
              << "\nviolations," << (report.any_violation ? "yes" : "no") << '\n';
  } else {
    print_groups(qcollide::group_by_k(records), "k");
    const auto report = qcollide::optimal_k_report(records);
    std::cout << "argmin_k," << report.argmin_k << "\nmean_total_queries," << report.mean_queries
              << "\ncube_root," << report.cube_root << "\nratio," << report.ratio << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oracle-model simulator for quantum collision and claw finding"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> algos = {"birthday", "simple",   "bht",
                                          "generalized", "claw-bij", "claw-r"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algo", o.algo, "Algorithm")->required()->check(CLI::IsMember(algos));
    sub->add_option("--trials", o.trials, "Trials per grid point")->required();
    sub->add_option("--seed", o.seed, "Base seed")->required();
    sub->add_option("--out", o.out, "Output CSV path")->required();
    sub->add_option("--c", o.c, "Birthday table constant")->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  };

  auto* run = app.add_subcommand("run", "Run trials at a single N");
  add_common(run);
  run->add_option("--n", o.n, "Domain size")->required();
  run->add_option("--r", o.r, "Preimages per image value")->capture_default_str();
  auto* k_opt = run->add_option("--k", o.k, "Table size");
  run->add_option("--k-policy", o.k_policy, "Table size policy")
      ->check(CLI::IsMember({"cube-root"}))
      ->excludes(k_opt);

  auto* sweep = app.add_subcommand("sweep", "Run trials over N and k grids");
  add_common(sweep);
  sweep->add_option("--n-grid", o.n_grid, "Comma-separated domain sizes")
      ->required()
      ->delimiter(',');
  sweep->add_option("--k-grid", o.k_grid, "Comma-separated table sizes (default: cube root)")
      ->delimiter(',');
  sweep->add_option("--r", o.r, "Preimages per image value")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a trial CSV");
  analyze_cmd->add_option("mode", o.mode, "scaling | tradeoff | optimal-k")
      ->required()
      ->check(CLI::IsMember({"scaling", "tradeoff", "optimal-k"}));
  analyze_cmd->add_option("--in", o.in, "Input CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*analyze_cmd) return analyze(o);
    return write_records(make_config(o, static_cast<bool>(*run)));
  } catch (const qcollide::ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qcollide::AnalysisInputError& e) {
    std::cerr << "analysis input error: " << e.what() << '\n';
    return kExitAnalysis;
  }
}
