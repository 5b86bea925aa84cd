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

#include "coalition/partition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>

#include "coalition/resource_game.hpp"

namespace coalition {

MutualGraph::MutualGraph(const StrategyProfile& profile)
    : neighbours_(profile.n(), 0) {
  const int n = profile.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if ((profile.wish(a) & player_bit(b)) && (profile.wish(b) & player_bit(a))) {
        neighbours_[a - 1] |= player_bit(b);
        neighbours_[b - 1] |= player_bit(a);
      }
}

MutualGraph::MutualGraph(int n, std::vector<PlayerMask> neighbours)
    : neighbours_(std::move(neighbours)) {
  neighbours_.resize(n, 0);
}

bool MutualGraph::is_clique(PlayerMask members) const {
  for (PlayerMask rest = members; rest; rest &= rest - 1) {
    int p = std::countr_zero(rest) + 1;
    if ((members & ~player_bit(p)) & ~neighbours_[p - 1]) return false;
  }
  return true;
}

int MutualGraph::edge_index(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  // Pairs (1,*) come first: row a starts after sum_{r<a} (n - r) pairs.
  return (a - 1) * n - (a - 1) * a / 2 + (b - a - 1);
}

std::uint32_t MutualGraph::edge_code() const {
  const int n = this->n();
  std::uint32_t code = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (adjacent(a, b)) code |= std::uint32_t{1} << edge_index(n, a, b);
  return code;
}

MutualGraph MutualGraph::from_edge_code(int n, std::uint32_t code) {
  std::vector<PlayerMask> nb(n, 0);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (code >> edge_index(n, a, b) & 1u) {
        nb[a - 1] |= player_bit(b);
        nb[b - 1] |= player_bit(a);
      }
  return MutualGraph(n, std::move(nb));
}

const std::vector<CPartition>& all_set_partitions(int n) {
  static std::mutex mu;
  static std::array<std::vector<CPartition>, kMaxPlayers + 1> cache;
  if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("n out of range");
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[n].empty()) return cache[n];

  std::vector<int> rgs(n, 0);
  // rgs[i] <= 1 + max(rgs[0..i-1]); rgs[0] == 0.
  auto emit = [&] {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<PlayerMask> masks(k, 0);
    for (int i = 0; i < n; ++i) masks[rgs[i]] |= player_bit(i + 1);
    std::vector<Coalition> cs;
    for (PlayerMask m : masks) cs.push_back(Coalition::from_mask(m));
    cache[n].emplace_back(n, std::move(cs));
  };
  auto rec = [&](auto&& self, int i, int max_block) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int v = 0; v <= max_block + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(max_block, v));
    }
  };
  rec(rec, 1, 0);
  return cache[n];
}

bool is_better(const CPartition& a, const CPartition& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("partitions over different player sets");
  if (a == b) return false;
  for (const Coalition& s : b.coalitions()) {
    bool inside = false;
    for (const Coalition& t : a.coalitions())
      if ((s.mask() & ~t.mask()) == 0) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

namespace {

// Enumerates clique partitions block by block: each new block holds the
// smallest unassigned player plus a clique of its unassigned neighbours.
void clique_partitions(const MutualGraph& g, PlayerMask unassigned,
                       std::vector<PlayerMask>& blocks,
                       std::vector<CPartition>& out) {
  if (unassigned == 0) {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = i + 1; j < blocks.size(); ++j)
        if (g.is_clique(blocks[i] | blocks[j])) return;
    std::vector<Coalition> cs;
    for (PlayerMask m : blocks) cs.push_back(Coalition::from_mask(m));
    out.emplace_back(g.n(), std::move(cs));
    return;
  }
  const int head = std::countr_zero(unassigned) + 1;
  const PlayerMask pool = g.neighbours(head) & unassigned;
  // Every subset of the pool, including the empty one.
  for (PlayerMask sub = pool;; sub = (sub - 1) & pool) {
    if (g.is_clique(sub)) {
      const PlayerMask block = sub | player_bit(head);
      blocks.push_back(block);
      clique_partitions(g, unassigned & ~block, blocks, out);
      blocks.pop_back();
    }
    if (sub == 0) break;
  }
}

}  // namespace

FormedPartitions formed_partitions(const MutualGraph& graph) {
  FormedPartitions result;
  std::vector<PlayerMask> blocks;
  clique_partitions(graph, all_players(graph.n()), blocks, result.partitions);
  std::sort(result.partitions.begin(), result.partitions.end());
  result.unique = result.partitions.size() == 1;
  return result;
}

FormedPartitions formed_partitions(const StrategyProfile& profile) {
  return formed_partitions(MutualGraph(profile));
}

CPartition udp(const CPartition& partition, int player) {
  if (player < 1 || player > partition.n())
    throw std::invalid_argument("player out of range");
  std::vector<Coalition> cs;
  for (const Coalition& c : partition.coalitions()) {
    if (c.contains(player) && c.size() > 1) {
      cs.push_back(Coalition::from_mask(player_bit(player)));
      cs.push_back(Coalition::from_mask(c.mask() & ~player_bit(player)));
    } else {
      cs.push_back(c);
    }
  }
  return CPartition(partition.n(), std::move(cs));
}

bool is_weak_criterion(const CPartition& partition) {
  const double k = partition.k();
  return partition.m_star() > (k + 1) * (k + 1) / (k * k);
}

StrategyProfile generating_profile(const CPartition& partition) {
  std::vector<PlayerMask> w(partition.n(), 0);
  for (const Coalition& c : partition.coalitions())
    for (int p : c.members()) w[p - 1] = c.mask();
  return StrategyProfile(std::move(w));
}

bool is_weak_exact(const CPartition& partition, const GameConfig& config) {
  for (const Coalition& c : partition.coalitions()) {
    if (c.size() < 2) continue;
    // Shares are equal inside a coalition, so one member decides for all.
    const int p = c.smallest();
    const CPartition split = udp(partition, p);
    if (player_share(split, config).of(p) >
        player_share(partition, config).of(p) + kUtilityTolerance)
      return true;
  }
  return false;
}

}  // namespace coalition
