// Copyright 2026 The coalition-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "coalition/resource_game.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coalition;

namespace {

CPartition P(int n, const char* text) { return CPartition::parse(n, text); }

}  // namespace

TEST_CASE("closed-form coalition utilities") {
  SUBCASE("k=2, eta=1") {
    const PartitionOutcome o = coalition_utilities(P(2, "{1}|{2}"), GameConfig::with_adamant(2, 1.0));
    CHECK(o.significant);
    for (double u : o.coalition_utility) CHECK(u == doctest::Approx(1.0 / 9).epsilon(1e-12));
    CHECK(o.adamant_utility == doctest::Approx(1.0 / 9).epsilon(1e-12));
  }
  SUBCASE("k=2, eta=0.4") {
    const PartitionOutcome o = coalition_utilities(P(3, "{1,2}|{3}"), GameConfig::with_adamant(3, 0.4));
    CHECK_FALSE(o.significant);
    for (double u : o.coalition_utility) CHECK(u == doctest::Approx(0.25));
    CHECK(o.adamant_utility == 0.0);
    CHECK(o.adamant_action == 0.0);
  }
  SUBCASE("k=1, eta=1 actions") {
    const PartitionOutcome o = closed_form_outcome(1, GameConfig::with_adamant(2, 1.0));
    CHECK(o.coalition_utility.at(0) == doctest::Approx(0.25));
    CHECK(o.coalition_action.at(0) == doctest::Approx(0.25));
    CHECK(o.adamant_action == doctest::Approx(0.25));
    CHECK(o.adamant_utility == doctest::Approx(0.25));
  }
  SUBCASE("k=3, eta=2") {
    const PartitionOutcome o = closed_form_outcome(3, GameConfig::with_adamant(3, 2.0));
    CHECK(o.coalition_utility.at(0) == doctest::Approx(1.0 / 49));
    CHECK(o.adamant_utility == doctest::Approx(16.0 / 49));
  }
  SUBCASE("grand coalition without an adamant player") {
    const PartitionOutcome o = coalition_utilities(CPartition::grand_coalition(4), GameConfig::without_adamant(4));
    CHECK(o.coalition_utility.at(0) == doctest::Approx(1.0));
    CHECK_FALSE(o.significant);
  }
  CHECK_THROWS_AS(closed_form_outcome(0, GameConfig::with_adamant(2, 1.0)), std::invalid_argument);
}

TEST_CASE("player shares") {
  SUBCASE("n=3 GC, eta=1") {
    const ShareVector s = player_share(CPartition::grand_coalition(3), GameConfig::with_adamant(3, 1.0));
    for (int p = 1; p <= 3; ++p) CHECK(s.of(p) == doctest::Approx(1.0 / 12));
  }
  SUBCASE("n=3 ALC, eta=1") {
    const ShareVector s = player_share(CPartition::all_alone(3), GameConfig::with_adamant(3, 1.0));
    for (int p = 1; p <= 3; ++p) CHECK(s.of(p) == doctest::Approx(1.0 / 16));
  }
  SUBCASE("n=4 two-two without adamant") {
    const ShareVector s = player_share(P(4, "{1,2}|{3,4}"), GameConfig::without_adamant(4));
    for (int p = 1; p <= 4; ++p) CHECK(s.of(p) == doctest::Approx(1.0 / 8));
  }
}

TEST_CASE("shares agree with the reference formula on every partition") {
  for (int n = 1; n <= 5; ++n)
    for (const oracle::Partition& part : oracle::partitions(n)) {
      const CPartition p = P(n, oracle::str(part).c_str());
      for (double eta : {0.0, 0.05, 0.45, 0.5, 0.55, 2.0 / 3, 0.8, 1.0, 3.0}) {
        const bool adamant = eta > 0;
        const GameConfig c = adamant ? GameConfig::with_adamant(n, eta) : GameConfig::without_adamant(n);
        const ShareVector s = player_share(p, c);
        for (int q = 1; q <= n; ++q)
          CHECK(s.of(q) == doctest::Approx(oracle::share(part, q, eta, adamant)).epsilon(1e-12));
        CHECK(coalition_sum(p, c) ==
              doctest::Approx(oracle::coalition_total(part, eta, adamant)).epsilon(1e-12));
      }
    }
}

TEST_CASE("shares sum to the coalition utilities") {
  for (int n = 1; n <= 6; ++n)
    for (const CPartition& p : all_set_partitions(n))
      for (double eta : {0.1, 0.6, 1.0, 4.0}) {
        const GameConfig c = GameConfig::with_adamant(n, eta);
        const ShareVector s = player_share(p, c);
        const PartitionOutcome o = coalition_utilities(p, c);
        double shares = 0, total = 0;
        for (double v : s.shares) shares += v;
        for (double v : o.coalition_utility) total += v;
        CHECK(std::fabs(shares - total) < 1e-12);
      }
}

TEST_CASE("profile utility takes the worst formed partition") {
  const StrategyProfile x = StrategyProfile::parse("1,2;1,2,3;1,2,3");
  const ShareVector u = profile_utility(x, GameConfig::with_adamant(3, 1.0));
  CHECK(u.of(1) == doctest::Approx(1.0 / 18));
  CHECK(u.of(2) == doctest::Approx(1.0 / 18));
  CHECK(u.of(3) == doctest::Approx(1.0 / 18));
  // Independent of eta, player 1 gets (1/2) / (1 + 2 eta)^2 while significant.
  for (double eta : {0.6, 1.5, 3.0}) {
    const ShareVector v = profile_utility(x, GameConfig::with_adamant(3, eta));
    CHECK(v.of(1) == doctest::Approx(0.5 / ((1 + 2 * eta) * (1 + 2 * eta))));
  }
}

TEST_CASE("coalition value") {
  CHECK(coalition_sum(1, GameConfig::with_adamant(3, 1.0)) == doctest::Approx(0.25));
  CHECK(coalition_sum(2, GameConfig::with_adamant(4, 0.45)) == doctest::Approx(0.5));
  CHECK(coalition_sum(1, GameConfig::without_adamant(5)) == doctest::Approx(1.0));
  CHECK(coalition_value(2, GameConfig::with_adamant(2, 0.5)) == doctest::Approx(0.25));
}

TEST_CASE("vanishing adamant player matches the game without one") {
  for (int n = 2; n <= 6; ++n)
    for (const CPartition& p : all_set_partitions(n)) {
      if (p.k() < 2) continue;
      const ShareVector a = player_share(p, GameConfig::with_adamant(n, 1e-6));
      const ShareVector b = player_share(p, GameConfig::without_adamant(n));
      for (int q = 1; q <= n; ++q) CHECK(std::fabs(a.of(q) - b.of(q)) < 1e-6);
    }
}

TEST_CASE("significance threshold is continuous") {
  for (int k = 2; k <= 6; ++k) {
    const double t = (k - 1.0) / k;
    const GameConfig at = GameConfig::with_adamant(6, t);
    const GameConfig above = GameConfig::with_adamant(6, std::nextafter(t, 1.0));
    CHECK(std::fabs(coalition_value(k, at) - coalition_value(k, above)) < 1e-12);
    CHECK(closed_form_outcome(k, above).adamant_utility < 1e-12);
  }
}

TEST_CASE("numeric best-response iteration matches the closed form") {
  SUBCASE("k=1, eta=1") {
    const GameConfig c = GameConfig::with_adamant(1, 1.0);
    CHECK(max_deviation(numeric_rsg_ne(1, c, 1e-10), closed_form_outcome(1, c)) < 1e-8);
  }
  SUBCASE("k=3, eta=0.6 has a silent adamant player") {
    const GameConfig c = GameConfig::with_adamant(3, 0.6);
    const PartitionOutcome o = numeric_rsg_ne(3, c, 1e-10);
    CHECK(o.adamant_utility < 1e-8);
    CHECK(closed_form_outcome(3, c).adamant_utility == 0.0);
  }
  SUBCASE("k=2, eta=1/2 sits on the boundary") {
    const GameConfig c = GameConfig::with_adamant(2, 0.5);
    const PartitionOutcome o = numeric_rsg_ne(2, c, 1e-10);
    CHECK(o.coalition_utility.at(0) == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(closed_form_outcome(2, c).coalition_utility.at(0) == doctest::Approx(0.25));
  }
  SUBCASE("k=2 with lambda0 = 0.4 is the plain two-player game") {
    // Each aggregate plays (k - 1)/(gamma k^2) = 1/4: share 1/2 less cost 1/4.
    const GameConfig c = GameConfig::with_adamant(2, 0.4);
    const PartitionOutcome o = numeric_rsg_ne(2, c, 1e-10);
    CHECK(o.adamant_action < 1e-6);
    CHECK(o.coalition_action.at(0) == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(o.coalition_utility.at(0) == doctest::Approx(0.25).epsilon(1e-6));
  }
  SUBCASE("non-unit lambda and gamma") {
    const GameConfig c = GameConfig::with_adamant(4, 1.3, 2.0, 0.7);
    for (int k = 1; k <= 4; ++k)
      CHECK(max_deviation(numeric_rsg_ne(k, c, 1e-10), closed_form_outcome(k, c)) < 1e-6);
  }
  SUBCASE("without an adamant player") {
    const GameConfig c = GameConfig::without_adamant(5);
    for (int k = 1; k <= 5; ++k)
      CHECK(max_deviation(numeric_rsg_ne(k, c, 1e-10), closed_form_outcome(k, c)) < 1e-6);
  }
  SUBCASE("an impossible iteration budget reports non-convergence") {
    OracleOptions opts;
    opts.max_iters = 2;
    CHECK_THROWS_AS(numeric_rsg_ne(4, GameConfig::with_adamant(4, 1.0), 1e-12, opts), NonConvergence);
  }
}
