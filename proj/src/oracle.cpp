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

#include "qcollide/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qcollide/random.hpp"

namespace qcollide {

namespace {

void check_domain(std::size_t n) {
  if (n == 0) throw std::invalid_argument("domain size must be positive");
  if (n > kMaxDomainSize)
    throw std::invalid_argument("domain size " + std::to_string(n) + " exceeds 2^24");
}

// Shuffle the domain, cut it into blocks of r, and give block i the label
// perm[i] for a second shuffle perm of the image.
std::vector<Value> random_blocks(std::size_t n, std::size_t r, Rng& rng) {
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Value> labels(n / r);
  std::iota(labels.begin(), labels.end(), Value{0});
  std::shuffle(labels.begin(), labels.end(), rng);

  std::vector<Value> mapping(n);
  for (std::size_t i = 0; i < n; ++i) mapping[order[i]] = labels[i / r];
  return mapping;
}

}  // namespace

BlackBoxFunction::BlackBoxFunction(std::vector<Value> mapping, std::size_t codomain_size)
    : mapping_(std::move(mapping)), codomain_size_(codomain_size) {
  check_domain(mapping_.size());
  if (codomain_size_ == 0) throw std::invalid_argument("codomain size must be positive");
  for (Value y : mapping_) {
    if (y >= codomain_size_) throw std::invalid_argument("mapping leaves the codomain");
  }
}

Value BlackBoxFunction::eval(Element x) {
  if (x >= mapping_.size()) {
    throw std::out_of_range("eval(" + std::to_string(x) + ") outside domain of size " +
                            std::to_string(mapping_.size()));
  }
  ++evaluations_;
  return mapping_[x];
}

FunctionProfile profile(const BlackBoxFunction& f) {
  FunctionProfile p;
  for (Value y : Introspection::mapping(f)) ++p.multiplicity[y];
  p.image_size = p.multiplicity.size();
  return p;
}

BlackBoxFunction make_r_to_one(std::size_t n, std::size_t r, std::uint64_t seed) {
  check_domain(n);
  if (r < 2) throw std::invalid_argument("r-to-one function needs r >= 2");
  if (n % r != 0) throw std::invalid_argument("r must divide the domain size");
  Rng rng = make_rng(seed);
  return BlackBoxFunction(random_blocks(n, r, rng), n / r);
}

BlackBoxFunction make_arbitrary_small_image(std::size_t n, std::size_t m, std::uint64_t seed) {
  check_domain(n);
  if (m == 0 || m > n) throw std::invalid_argument("codomain size must be in [1, N]");
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<Value> pick(0, static_cast<Value>(m - 1));
  std::vector<Value> mapping(n);
  for (auto& y : mapping) y = pick(rng);
  return BlackBoxFunction(std::move(mapping), m);
}

ClawPair make_claw_pair(std::size_t n, std::size_t r, std::uint64_t seed) {
  check_domain(n);
  if (r == 0 || n % r != 0) throw std::invalid_argument("r must be positive and divide N");
  Rng rng = make_rng(seed);
  auto f = random_blocks(n, r, rng);
  auto g = random_blocks(n, r, rng);
  return {BlackBoxFunction(std::move(f), n / r), BlackBoxFunction(std::move(g), n / r)};
}

}  // namespace qcollide
