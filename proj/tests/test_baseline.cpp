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

#include <cmath>

#include "doctest.h"
#include "qcollide/baseline.hpp"
#include "test_support.hpp"

using namespace qcollide;

TEST_CASE("birthday table size clamps to N") {
  CHECK(birthday_table_size(2, 1.5) == 2);
  CHECK(birthday_table_size(10000, 1.18) == 118);
  CHECK(birthday_table_size(100000, 1.18) == 374);
  CHECK_THROWS_AS(birthday_table_size(10, 0.0), std::invalid_argument);
}

TEST_CASE("birthday collision") {
  SUBCASE("tiny N uses the full domain") {
    auto f = make_r_to_one(2, 2, 0);
    Rng rng = make_rng(0);
    const auto r = birthday_collision(f, 1.5, rng);
    REQUIRE(r.found());
    CHECK(r.pair->first == 0);
    CHECK(r.pair->second == 1);
    CHECK(r.total_queries == 2);
  }
  SUBCASE("injective functions never collide") {
    auto f = make_claw_pair(400, 1, 3).f;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng = make_rng(seed);
      const auto before = f.evaluations();
      const auto r = birthday_collision(f, 1.18, rng);
      CHECK_FALSE(r.found());
      CHECK(r.total_queries == 24);
      CHECK(f.evaluations() - before == 24);
    }
  }
  SUBCASE("success rate at c = 1.18 matches the exact birthday law") {
    for (std::size_t n : {10000u, 100000u}) {
      const std::size_t k = birthday_table_size(n, kBirthdayConstant);
      int successes = 0;
      constexpr int trials = 2000;
      for (std::uint64_t seed = 0; seed < trials; ++seed) {
        auto f = make_r_to_one(n, 2, seed);
        Rng rng = make_rng(seed, 1);
        const auto r = birthday_collision(f, kBirthdayConstant, rng);
        REQUIRE(r.total_queries == k);
        REQUIRE(f.evaluations() == k);
        if (r.found()) {
          REQUIRE(Introspection::peek(f, r.pair->first) == Introspection::peek(f, r.pair->second));
          ++successes;
        }
      }
      const double rate = static_cast<double>(successes) / trials;
      const double p = 1.0 - testing::no_collision_probability(n, k);
      CHECK(rate >= 0.45);
      CHECK(std::abs(rate - p) < 4 * std::sqrt(p * (1 - p) / trials));
    }
  }
}
