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

#include "qcollide/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "qcollide/analysis.hpp"
#include "qcollide/claw.hpp"
#include "qcollide/collision.hpp"
#include "qcollide/oracle.hpp"
#include "qcollide/random.hpp"
#include "qcollide/table.hpp"

namespace qcollide {

namespace {

constexpr std::array<std::string_view, 6> kAlgorithmNames = {
    "birthday", "simple", "bht", "generalized", "claw-bij", "claw-r"};

bool is_collision_algorithm(Algorithm a) {
  return a != Algorithm::kClawBijective && a != Algorithm::kClawRToOne;
}

bool valid_collision(const BlackBoxFunction& f, const Collision& c) {
  return c.first != c.second && c.first < f.domain_size() && c.second < f.domain_size() &&
         Introspection::peek(f, c.first) == Introspection::peek(f, c.second);
}

void audit(std::uint64_t reported, std::uint64_t counted, const char* what) {
  if (reported != counted) {
    throw std::logic_error(std::string("accounting mismatch on ") + what + ": reported " +
                           std::to_string(reported) + ", counter moved " +
                           std::to_string(counted));
  }
}

ExperimentRecord collision_trial(Algorithm algorithm, BlackBoxFunction& f, std::size_t r,
                                 std::size_t k, double birthday_c, Rng& rng) {
  ExperimentRecord rec;
  std::optional<CollisionResult> result;
  try {
    switch (algorithm) {
      case Algorithm::kBirthday:
        result = birthday_collision(f, birthday_c, rng);
        break;
      case Algorithm::kSimple:
        result = simple_quantum_collision(f, rng);
        break;
      case Algorithm::kBht:
        result = bht_collision(f, k, r, rng);
        break;
      case Algorithm::kGeneralized:
        result = generalized_collision(f, k, rng, BBHTConfig::for_domain(f.domain_size()));
        break;
      default:
        throw std::logic_error("not a collision algorithm");
    }
  } catch (const SearchExhausted&) {
  }

  rec.f_queries = f.evaluations();
  if (result) {
    audit(result->total_queries, rec.f_queries, "f");
    rec.table_space = result->table_space;
    rec.success = result->pair && valid_collision(f, *result->pair);
  }
  return rec;
}

ExperimentRecord claw_trial(Algorithm algorithm, ClawPair& pair, std::size_t r, std::size_t k,
                            Rng& rng) {
  ExperimentRecord rec;
  std::optional<ClawResult> result;
  try {
    result = algorithm == Algorithm::kClawBijective ? claw_bijective(pair.f, pair.g, k, rng)
                                                    : claw_r_to_one(pair.f, pair.g, k, r, rng);
  } catch (const SearchExhausted&) {
  } catch (const SelectionExhausted&) {
  }

  rec.f_queries = pair.f.evaluations();
  rec.g_queries = pair.g.evaluations();
  if (result) {
    audit(result->f_queries, rec.f_queries, "f");
    audit(result->g_queries, rec.g_queries, "g");
    rec.table_space = result->table_space;
    rec.success = Introspection::peek(pair.f, result->x) == Introspection::peek(pair.g, result->y);
  }
  return rec;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  return kAlgorithmNames.at(static_cast<std::size_t>(algorithm));
}

std::optional<Algorithm> parse_algorithm(std::string_view token) {
  for (std::size_t i = 0; i < kAlgorithmNames.size(); ++i) {
    if (kAlgorithmNames[i] == token) return static_cast<Algorithm>(i);
  }
  return std::nullopt;
}

void validate(const SweepConfig& config) {
  if (config.n_grid.empty()) throw ConfigError("N grid is empty");
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (!(config.birthday_c > 0.0)) throw ConfigError("birthday constant must be positive");

  const Algorithm a = config.algorithm;
  const std::size_t r = a == Algorithm::kClawBijective ? 1 : config.r;
  if (r < 1 || (a != Algorithm::kClawBijective && r < 2))
    throw ConfigError("r must be >= 2 for " + std::string(to_string(a)));
  if (a == Algorithm::kSimple && r != 2) throw ConfigError("simple needs a two-to-one function (r = 2)");

  for (std::size_t n : config.n_grid) {
    if (n < 2 || n > kMaxDomainSize) throw ConfigError("N must be in [2, 2^24]");
    if (a == Algorithm::kGeneralized) {
      if (n / r < 1) throw ConfigError("generalized needs N / r >= 1");
    } else if (n % r != 0) {
      throw ConfigError("r = " + std::to_string(r) + " does not divide N = " + std::to_string(n));
    }
    for (std::size_t k : table_sizes(config, n)) {
      if (k < 1 || k > n) throw ConfigError("k = " + std::to_string(k) + " outside [1, N]");
      if (a == Algorithm::kClawRToOne && 2 * r * k > n)
        throw ConfigError("claw-r needs k <= N/(2r)");
    }
  }
}

std::vector<std::size_t> table_sizes(const SweepConfig& config, std::size_t n) {
  switch (config.algorithm) {
    case Algorithm::kBirthday:
      return {birthday_table_size(n, config.birthday_c)};
    case Algorithm::kSimple:
      return {1};
    case Algorithm::kClawBijective:
      if (config.k_grid.empty()) return {default_table_size(n, 1)};
      return config.k_grid;
    default:
      if (config.k_grid.empty()) return {default_table_size(n, config.r)};
      return config.k_grid;
  }
}

std::uint64_t trial_seed(std::uint64_t base_seed, Algorithm algorithm, std::size_t n,
                         std::size_t r, std::size_t k, std::size_t trial) {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(algorithm));
  for (std::uint64_t part : {std::uint64_t{n}, std::uint64_t{r}, std::uint64_t{k}, std::uint64_t{trial}})
    h = splitmix64(h ^ part);
  return base_seed ^ h;
}

ExperimentRecord run_trial(Algorithm algorithm, std::size_t n, std::size_t r, std::size_t k,
                           std::uint64_t seed, std::size_t trial, double birthday_c) {
  Rng rng = make_rng(seed, 1);
  ExperimentRecord rec;
  if (is_collision_algorithm(algorithm)) {
    BlackBoxFunction f = algorithm == Algorithm::kGeneralized
                             ? make_arbitrary_small_image(n, n / r, seed)
                             : make_r_to_one(n, r, seed);
    rec = collision_trial(algorithm, f, r, k, birthday_c, rng);
  } else {
    if (algorithm == Algorithm::kClawBijective) r = 1;
    ClawPair pair = make_claw_pair(n, r, seed);
    rec = claw_trial(algorithm, pair, r, k, rng);
  }
  rec.algorithm = algorithm;
  rec.n = n;
  rec.r = r;
  rec.k = k;
  rec.seed = seed;
  rec.trial = trial;
  rec.total_queries = rec.f_queries + rec.g_queries;
  return rec;
}

std::vector<ExperimentRecord> run_trials(const SweepConfig& config) {
  validate(config);
  const std::size_t r = config.algorithm == Algorithm::kClawBijective ? 1 : config.r;

  struct Task {
    std::size_t n, k, trial;
  };
  std::vector<Task> tasks;
  for (std::size_t n : config.n_grid)
    for (std::size_t k : table_sizes(config, n))
      for (std::size_t i = 0; i < config.trials; ++i) tasks.push_back({n, k, i});

  std::vector<ExperimentRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size() && !failed; i = next++) {
      const Task& t = tasks[i];
      try {
        const auto seed = trial_seed(config.base_seed, config.algorithm, t.n, r, t.k, t.trial);
        records[i] = run_trial(config.algorithm, t.n, r, t.k, seed, t.trial, config.birthday_c);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);
  return records;
}

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << to_string(r.algorithm) << ',' << r.n << ',' << r.r << ',' << r.k << ',' << r.seed << ','
        << r.trial << ',' << (r.success ? 1 : 0) << ',' << r.f_queries << ',' << r.g_queries << ','
        << r.total_queries << ',' << r.table_space << '\n';
  }
}

namespace {

template <typename T>
T parse_field(std::string_view field, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw AnalysisInputError("line " + std::to_string(line) + ": bad integer '" +
                             std::string(field) + "'");
  return value;
}

}  // namespace

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw AnalysisInputError("empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw AnalysisInputError("unexpected CSV header: " + line);

  std::vector<ExperimentRecord> records;
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string_view> f;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 11)
      throw AnalysisInputError("line " + std::to_string(lineno) + ": expected 11 fields");

    ExperimentRecord r;
    const auto algorithm = parse_algorithm(f[0]);
    if (!algorithm)
      throw AnalysisInputError("line " + std::to_string(lineno) + ": unknown algorithm");
    r.algorithm = *algorithm;
    r.n = parse_field<std::size_t>(f[1], lineno);
    r.r = parse_field<std::size_t>(f[2], lineno);
    r.k = parse_field<std::size_t>(f[3], lineno);
    r.seed = parse_field<std::uint64_t>(f[4], lineno);
    r.trial = parse_field<std::size_t>(f[5], lineno);
    const auto success = parse_field<int>(f[6], lineno);
    if (success != 0 && success != 1)
      throw AnalysisInputError("line " + std::to_string(lineno) + ": success must be 0 or 1");
    r.success = success == 1;
    r.f_queries = parse_field<std::uint64_t>(f[7], lineno);
    r.g_queries = parse_field<std::uint64_t>(f[8], lineno);
    r.total_queries = parse_field<std::uint64_t>(f[9], lineno);
    r.table_space = parse_field<std::size_t>(f[10], lineno);
    if (r.total_queries != r.f_queries + r.g_queries)
      throw AnalysisInputError("line " + std::to_string(lineno) +
                               ": total_queries != f_queries + g_queries");
    records.push_back(r);
  }
  return records;
}

}  // namespace qcollide
