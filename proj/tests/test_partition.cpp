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

#include <numeric>

#include "coalition/partition.hpp"
#include "coalition/resource_game.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coalition;

namespace {

std::vector<std::string> texts(const FormedPartitions& f) {
  std::vector<std::string> out;
  for (const CPartition& p : f.partitions) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> texts(const std::vector<oracle::Partition>& ps) {
  std::vector<std::string> out;
  for (const oracle::Partition& p : ps) out.push_back(oracle::str(p));
  std::sort(out.begin(), out.end());
  return out;
}

CPartition P(int n, const char* text) { return CPartition::parse(n, text); }

}  // namespace

TEST_CASE("set partition counts are Bell numbers") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; ++n) CHECK(all_set_partitions(n).size() == bell[n]);
}

TEST_CASE("is_better is strict coarsening") {
  CHECK(is_better(P(3, "{1,2,3}"), P(3, "{1,2}|{3}")));
  CHECK_FALSE(is_better(P(3, "{1,2}|{3}"), P(3, "{1}|{2,3}")));
  CHECK_FALSE(is_better(P(3, "{1}|{2,3}"), P(3, "{1,2}|{3}")));
  CHECK_FALSE(is_better(P(3, "{1,2}|{3}"), P(3, "{1,2}|{3}")));
  CHECK_THROWS_AS(is_better(P(3, "{1,2,3}"), P(2, "{1,2}")), std::invalid_argument);
}

TEST_CASE("formed partitions of the listed profiles") {
  SUBCASE("n=3, player 1 excludes 3") {
    const FormedPartitions f = formed_partitions(StrategyProfile::parse("1,2;1,2,3;1,2,3"));
    CHECK(texts(f) == std::vector<std::string>{"{1,2}|{3}", "{1}|{2,3}"});
    CHECK_FALSE(f.unique);
  }
  SUBCASE("n=3, player 1 alone") {
    const FormedPartitions f = formed_partitions(StrategyProfile::parse("1;1,2,3;1,2,3"));
    CHECK(texts(f) == std::vector<std::string>{"{1}|{2,3}"});
    CHECK(f.unique);
  }
  SUBCASE("n=2, both want each other") {
    const FormedPartitions f = formed_partitions(StrategyProfile::parse("1,2;1,2"));
    CHECK(texts(f) == std::vector<std::string>{"{1,2}"});
    CHECK(f.unique);
  }
  SUBCASE("n=4, player 1 excludes 4") {
    // Besides the two three-one splits, both two-two splits that separate 1
    // from 4 are clique partitions whose only coarsening is blocked.
    const FormedPartitions f =
        formed_partitions(StrategyProfile::parse("1,2,3;1,2,3,4;1,2,3,4;1,2,3,4"));
    CHECK(texts(f) ==
          std::vector<std::string>{"{1,2,3}|{4}", "{1,2}|{3,4}", "{1,3}|{2,4}", "{1}|{2,3,4}"});
    CHECK_FALSE(f.unique);
  }
}

TEST_CASE("merge characterization equals the definitional minimum, n <= 4") {
  std::size_t profiles = 0;
  for (int n = 1; n <= 4; ++n)
    for (const oracle::Profile& x : oracle::profiles(n)) {
      ++profiles;
      const StrategyProfile sp = StrategyProfile::parse(oracle::profile_str(x));
      const FormedPartitions got = formed_partitions(sp);
      const std::vector<oracle::Partition> want = oracle::formed(x);
      REQUIRE(texts(got) == texts(want));
      CHECK(got.unique == (want.size() == 1));
      const MutualGraph g(sp);
      for (const CPartition& p : got.partitions)
        for (const Coalition& c : p.coalitions()) CHECK(g.is_clique(c.mask()));
    }
  CHECK(profiles == 1 + 4 + 64 + 4096);
}

TEST_CASE("all alone is formed iff no mutual edge exists") {
  for (int n = 1; n <= 4; ++n)
    for (const oracle::Profile& x : oracle::profiles(n)) {
      const StrategyProfile sp = StrategyProfile::parse(oracle::profile_str(x));
      const FormedPartitions f = formed_partitions(sp);
      const MutualGraph g(sp);
      bool any_edge = false;
      for (int p = 1; p <= n; ++p) any_edge = any_edge || g.neighbours(p) != 0;
      const bool has_alc =
          std::find(f.partitions.begin(), f.partitions.end(), CPartition::all_alone(n)) !=
          f.partitions.end();
      CHECK(has_alc == !any_edge);
    }
}

TEST_CASE("formed partitions commute with relabeling, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());  // a full cycle
    for (const oracle::Profile& x : oracle::profiles(n)) {
      const StrategyProfile sp = StrategyProfile::parse(oracle::profile_str(x));
      std::vector<CPartition> mapped;
      for (const CPartition& p : formed_partitions(sp).partitions) mapped.push_back(relabel(p, perm));
      std::sort(mapped.begin(), mapped.end());
      CHECK(formed_partitions(relabel(sp, perm)).partitions == mapped);
    }
  }
}

TEST_CASE("udp splits the player's coalition") {
  CHECK(udp(P(3, "{1,2}|{3}"), 1) == P(3, "{1}|{2}|{3}"));
  CHECK(udp(P(3, "{1}|{2,3}"), 1) == P(3, "{1}|{2,3}"));
  CHECK(udp(P(4, "{1,2,3,4}"), 2) == P(4, "{2}|{1,3,4}"));
  CHECK_THROWS_AS(udp(P(3, "{1,2,3}"), 4), std::invalid_argument);
}

TEST_CASE("leaving alone from a uniquely forming profile gives udp, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const oracle::Profile& x : oracle::profiles(n)) {
      const StrategyProfile sp = StrategyProfile::parse(oracle::profile_str(x));
      const FormedPartitions f = formed_partitions(sp);
      if (!f.unique) continue;
      for (int p = 1; p <= n; ++p) {
        const FormedPartitions d = formed_partitions(sp.with_wish(p, player_bit(p)));
        REQUIRE(d.unique);
        CHECK(d.partitions.front() == udp(f.partitions.front(), p));
      }
    }
}

TEST_CASE("generating profile forms its partition uniquely") {
  for (int n = 1; n <= 6; ++n)
    for (const CPartition& p : all_set_partitions(n)) {
      const FormedPartitions f = formed_partitions(generating_profile(p));
      CHECK(f.unique);
      CHECK(f.partitions.front() == p);
    }
}

TEST_CASE("size criterion for weakness") {
  CHECK(is_weak_criterion(P(5, "{1,2}|{3}|{4}|{5}")));
  CHECK_FALSE(is_weak_criterion(P(2, "{1,2}")));
  CHECK_FALSE(is_weak_criterion(P(4, "{1,2}|{3,4}")));  // 2 <= 9/4
}

TEST_CASE("exact weakness") {
  CHECK(is_weak_exact(P(5, "{1,2}|{3}|{4}|{5}"), GameConfig::with_adamant(5, 1.0)));
  CHECK_FALSE(is_weak_exact(P(2, "{1,2}"), GameConfig::with_adamant(2, 1.0)));
  for (double eta : {0.1, 0.5, 1.0, 5.0})
    CHECK_FALSE(is_weak_exact(CPartition::all_alone(3), GameConfig::with_adamant(3, eta)));
}

TEST_CASE("exact weakness matches a deviation-based oracle, n <= 4") {
  // Weak: in the generating profile some member of a coalition of size >= 2
  // strictly gains by wishing only for itself.
  for (int n = 1; n <= 4; ++n)
    for (const oracle::Partition& part : oracle::partitions(n))
      for (double eta : {0.05, 0.3, 0.45, 0.55, 0.7, 1.0, 2.5, 4.0}) {
        oracle::Profile x(n);
        for (const oracle::Set& s : part)
          for (int p : s) x[p - 1] = s;
        bool weak = false;
        for (const oracle::Set& s : part) {
          if (s.size() < 2) continue;
          for (int p : s) {
            oracle::Profile y = x;
            y[p - 1] = {p};
            double before = 1e300, after = 1e300;
            for (const oracle::Partition& q : oracle::formed(x))
              before = std::min(before, oracle::share(q, p, eta, true));
            for (const oracle::Partition& q : oracle::formed(y))
              after = std::min(after, oracle::share(q, p, eta, true));
            if (after > before + 1e-12) weak = true;
          }
        }
        CHECK(is_weak_exact(P(n, oracle::str(part).c_str()), GameConfig::with_adamant(n, eta)) ==
              weak);
      }
}

TEST_CASE("mutual graph edge codes round-trip") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint32_t graphs = 1u << (n * (n - 1) / 2);
    for (std::uint32_t code = 0; code < graphs; ++code)
      CHECK(MutualGraph::from_edge_code(n, code).edge_code() == code);
  }
}
