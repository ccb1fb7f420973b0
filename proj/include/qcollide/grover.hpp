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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qcollide/oracle.hpp"
#include "qcollide/random.hpp"

namespace qcollide {

/**
 * Grover dynamics restricted to the plane spanned by the uniform
 * superpositions over marked and unmarked inputs. Starting from the uniform
 * state the evolution never leaves this plane, so two real amplitudes
 * describe it exactly for any N and any number t of marked inputs.
 *
 * After j iterations the marked mass is sin^2((2j + 1) theta) with
 * theta = asin(sqrt(t / N)).
 */
class GroverState {
 public:
  GroverState(std::size_t n, std::size_t t);

  void iterate(std::uint64_t count = 1) noexcept { iterations_ += count; }

  std::size_t domain_size() const noexcept { return n_; }
  std::size_t marked_count() const noexcept { return t_; }
  std::uint64_t iterations() const noexcept { return iterations_; }
  double theta() const noexcept { return theta_; }

  /// Probability that a measurement lands on some marked input.
  double marked_mass() const noexcept;
  double unmarked_mass() const noexcept { return 1.0 - marked_mass(); }

 private:
  std::size_t n_;
  std::size_t t_;
  double theta_;
  std::uint64_t iterations_ = 0;
};

/// sin^2((2j + 1) asin(sqrt(t / N))); exactly 0 for t = 0 and 1 for t = N.
double success_probability(std::size_t n, std::size_t t, std::uint64_t j);

/// floor(pi / (4 theta)): the integer nearest the iteration count that
/// rotates the state onto the marked axis. Succeeds with probability at
/// least 1/2 for every 1 <= t <= N. Requires 1 <= t <= N.
std::uint64_t optimal_iterations(std::size_t n, std::size_t t);

struct SearchOutcome {
  std::optional<Element> found;
  std::uint64_t oracle_queries = 0;  ///< iterations + one verification per attempt
  std::uint64_t iterations = 0;      ///< Grover iterations summed over attempts
  std::uint64_t attempts = 0;
};

/// A search gave up: attempt cap (known t) or query budget (BBHT) reached.
class SearchExhausted : public std::runtime_error {
 public:
  explicit SearchExhausted(const SearchOutcome& spent);
  const SearchOutcome& outcome() const noexcept { return spent_; }

 private:
  SearchOutcome spent_;
};

/**
 * The predicate H being searched, as seen by the simulator.
 *
 * Search schedules use `query` (a classical H call, used to verify a
 * measured candidate) and `superposed_query` (charges the phase-oracle calls
 * of Grover iterations). `marked` is ground truth consumed only by the
 * measurement simulation, standing in for the physics of the device.
 */
class SearchOracle {
 public:
  virtual ~SearchOracle() = default;

  virtual std::size_t domain_size() const = 0;
  virtual bool query(Element x) = 0;
  virtual void superposed_query(std::uint64_t count) = 0;
  /// Sorted ascending.
  virtual std::span<const Element> marked() const = 0;
};

/// Explicitly planted marked set; counts its own queries.
class PlantedSearch final : public SearchOracle {
 public:
  PlantedSearch(std::size_t n, std::vector<Element> marked);

  std::size_t domain_size() const override { return n_; }
  bool query(Element x) override;
  void superposed_query(std::uint64_t count) override { queries_ += count; }
  std::span<const Element> marked() const override { return marked_; }

  std::uint64_t queries() const noexcept { return queries_; }

 private:
  std::size_t n_;
  std::vector<Element> marked_;
  std::vector<bool> is_marked_;
  std::uint64_t queries_ = 0;
};

/// H(x) = test(x, F(x)). Every H call, classical or superposed, costs
/// exactly one evaluation of F; `test` itself is free.
class FunctionSearch final : public SearchOracle {
 public:
  using Test = std::function<bool(Element, Value)>;

  FunctionSearch(BlackBoxFunction& f, Test test);

  std::size_t domain_size() const override { return f_.domain_size(); }
  bool query(Element x) override { return test_(x, f_.eval(x)); }
  void superposed_query(std::uint64_t count) override { f_.superposed_eval(count); }
  std::span<const Element> marked() const override { return marked_; }

 private:
  BlackBoxFunction& f_;
  Test test_;
  std::vector<Element> marked_;
};

/// Samples a measurement after j iterations: marked with probability
/// sin^2((2j+1) theta) for the true marked count, then uniform inside the
/// chosen class.
Element simulate_measurement(const SearchOracle& oracle, std::uint64_t j, Rng& rng);

inline constexpr std::uint64_t kKnownTAttemptCap = 64;

/**
 * Repeat-until-verified Grover search with a known marked count t.
 *
 * Each attempt runs optimal_iterations(N, t) iterations, measures, and
 * verifies the candidate with one classical query. Throws SearchExhausted
 * after 64 failed attempts. The dynamics always use the oracle's true marked
 * set, so a wrong t shows up as a low success rate.
 */
SearchOutcome grover_search_known_t(SearchOracle& oracle, std::size_t t, Rng& rng);

struct BBHTConfig {
  double growth_factor = 6.0 / 5.0;          ///< must lie in (1, 4/3)
  std::uint64_t max_total_queries = 1 << 20;

  /// Budget of 64 (ceil(sqrt N) + 1) queries, far above the expected cost
  /// of any instance with a marked input.
  static BBHTConfig for_domain(std::size_t n);
};

/**
 * Search with an unknown number of marked inputs. The iteration count of
 * each attempt is drawn uniformly from [0, ceil(m)); after a failed
 * verification m grows by the growth factor, capped at sqrt(N).
 * Throws SearchExhausted rather than start an attempt that could exceed the
 * query budget.
 */
SearchOutcome bbht_search(SearchOracle& oracle, Rng& rng, const BBHTConfig& config);

/**
 * Dense 2^n-amplitude Grover simulation: Hadamards on every qubit, then per
 * iteration a phase flip on marked basis states and the inversion about the
 * mean built as H^n (2|0><0| - I) H^n. Independent of GroverState; n <= 12.
 */
class GroverStatevector {
 public:
  GroverStatevector(unsigned n_qubits, std::span<const Element> marked);

  void iterate();
  double marked_probability() const;
  double total_probability() const;

 private:
  void hadamard_all();

  unsigned n_qubits_;
  std::vector<std::complex<double>> amplitudes_;
  std::vector<bool> marked_;
};

inline constexpr unsigned kMaxReferenceQubits = 12;

/// Marked probability after j iterations of the dense simulation.
double statevector_reference(std::span<const Element> marked, unsigned n_qubits, std::uint64_t j);

}  // namespace qcollide
