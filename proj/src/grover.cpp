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

#include "qcollide/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qcollide {

GroverState::GroverState(std::size_t n, std::size_t t) : n_(n), t_(t) {
  if (n == 0 || t > n) throw std::invalid_argument("need N >= 1 and 0 <= t <= N");
  theta_ = std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(n)));
}

double GroverState::marked_mass() const noexcept {
  if (t_ == 0) return 0.0;
  if (t_ == n_) return 1.0;
  const double s = std::sin(static_cast<double>(2 * iterations_ + 1) * theta_);
  return s * s;
}

double success_probability(std::size_t n, std::size_t t, std::uint64_t j) {
  GroverState state(n, t);
  state.iterate(j);
  return state.marked_mass();
}

std::uint64_t optimal_iterations(std::size_t n, std::size_t t) {
  if (t < 1 || t > n) throw std::invalid_argument("optimal_iterations needs 1 <= t <= N");
  const GroverState state(n, t);
  return static_cast<std::uint64_t>(std::floor(std::numbers::pi / (4.0 * state.theta())));
}

SearchExhausted::SearchExhausted(const SearchOutcome& spent)
    : std::runtime_error("search gave up after " + std::to_string(spent.attempts) +
                         " attempts and " + std::to_string(spent.oracle_queries) + " queries"),
      spent_(spent) {}

PlantedSearch::PlantedSearch(std::size_t n, std::vector<Element> marked)
    : n_(n), marked_(std::move(marked)), is_marked_(n, false) {
  std::ranges::sort(marked_);
  if (std::ranges::adjacent_find(marked_) != marked_.end())
    throw std::invalid_argument("marked inputs must be distinct");
  for (Element x : marked_) {
    if (x >= n_) throw std::invalid_argument("marked input outside the domain");
    is_marked_[x] = true;
  }
}

bool PlantedSearch::query(Element x) {
  ++queries_;
  return is_marked_.at(x);
}

FunctionSearch::FunctionSearch(BlackBoxFunction& f, Test test) : f_(f), test_(std::move(test)) {
  auto mapping = Introspection::mapping(f_);
  for (std::size_t x = 0; x < mapping.size(); ++x) {
    if (test_(static_cast<Element>(x), mapping[x])) marked_.push_back(static_cast<Element>(x));
  }
}

Element simulate_measurement(const SearchOracle& oracle, std::uint64_t j, Rng& rng) {
  const std::size_t n = oracle.domain_size();
  const auto marked = oracle.marked();
  const double p = success_probability(n, marked.size(), j);

  if (std::bernoulli_distribution(p)(rng)) {
    std::uniform_int_distribution<std::size_t> pick(0, marked.size() - 1);
    return marked[pick(rng)];
  }
  // i-th unmarked input: step over every marked input at or below it.
  std::uniform_int_distribution<std::size_t> pick(0, n - marked.size() - 1);
  std::size_t x = pick(rng);
  for (Element m : marked) {
    if (m > x) break;
    ++x;
  }
  return static_cast<Element>(x);
}

SearchOutcome grover_search_known_t(SearchOracle& oracle, std::size_t t, Rng& rng) {
  const std::uint64_t j = optimal_iterations(oracle.domain_size(), t);
  SearchOutcome out;
  while (out.attempts < kKnownTAttemptCap) {
    oracle.superposed_query(j);
    out.iterations += j;
    const Element candidate = simulate_measurement(oracle, j, rng);
    ++out.attempts;
    out.oracle_queries += j + 1;
    if (oracle.query(candidate)) {
      out.found = candidate;
      return out;
    }
  }
  throw SearchExhausted(out);
}

BBHTConfig BBHTConfig::for_domain(std::size_t n) {
  BBHTConfig config;
  const auto root = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  config.max_total_queries = 64 * (root + 1);
  return config;
}

SearchOutcome bbht_search(SearchOracle& oracle, Rng& rng, const BBHTConfig& config) {
  if (!(config.growth_factor > 1.0 && config.growth_factor < 4.0 / 3.0))
    throw std::invalid_argument("BBHT growth factor must lie in (1, 4/3)");
  if (config.max_total_queries == 0) throw std::invalid_argument("BBHT budget must be positive");

  const double cap = std::sqrt(static_cast<double>(oracle.domain_size()));
  double m = 1.0;
  SearchOutcome out;
  for (;;) {
    const auto upper = static_cast<std::uint64_t>(std::ceil(m));
    const std::uint64_t j = std::uniform_int_distribution<std::uint64_t>(0, upper - 1)(rng);
    if (out.oracle_queries + j + 1 > config.max_total_queries) throw SearchExhausted(out);

    oracle.superposed_query(j);
    out.iterations += j;
    const Element candidate = simulate_measurement(oracle, j, rng);
    ++out.attempts;
    out.oracle_queries += j + 1;
    if (oracle.query(candidate)) {
      out.found = candidate;
      return out;
    }
    m = std::min(config.growth_factor * m, cap);
  }
}

GroverStatevector::GroverStatevector(unsigned n_qubits, std::span<const Element> marked)
    : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxReferenceQubits)
    throw std::invalid_argument("state-vector reference supports 1..12 qubits");
  const std::size_t dim = std::size_t{1} << n_qubits;
  marked_.assign(dim, false);
  for (Element x : marked) marked_.at(x) = true;
  amplitudes_.assign(dim, {0.0, 0.0});
  amplitudes_[0] = 1.0;
  hadamard_all();
}

void GroverStatevector::hadamard_all() {
  const double h = std::numbers::sqrt2 / 2.0;
  const std::size_t dim = amplitudes_.size();
  for (unsigned q = 0; q < n_qubits_; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const auto a = amplitudes_[i];
      const auto b = amplitudes_[i | bit];
      amplitudes_[i] = h * (a + b);
      amplitudes_[i | bit] = h * (a - b);
    }
  }
}

void GroverStatevector::iterate() {
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (marked_[i]) amplitudes_[i] = -amplitudes_[i];
  }
  hadamard_all();
  for (std::size_t i = 1; i < amplitudes_.size(); ++i) amplitudes_[i] = -amplitudes_[i];
  hadamard_all();
}

double GroverStatevector::marked_probability() const {
  double p = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (marked_[i]) p += std::norm(amplitudes_[i]);
  }
  return p;
}

double GroverStatevector::total_probability() const {
  double p = 0.0;
  for (const auto& a : amplitudes_) p += std::norm(a);
  return p;
}

double statevector_reference(std::span<const Element> marked, unsigned n_qubits, std::uint64_t j) {
  GroverStatevector sv(n_qubits, marked);
  for (std::uint64_t i = 0; i < j; ++i) sv.iterate();
  return sv.marked_probability();
}

}  // namespace qcollide
