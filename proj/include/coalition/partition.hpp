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

#ifndef COALITION_PARTITION_HPP
#define COALITION_PARTITION_HPP

// Which partitions a strategy profile forms, and the partition order used
// by the formation rules.
//
// A coalition is admissible under a profile when every pair of its members
// want each other (a clique of the mutual graph). A profile forms every
// admissible partition that cannot be strictly coarsened into another
// admissible one.

#include <vector>

#include "coalition/game.hpp"

namespace coalition {

class MutualGraph {
 public:
  MutualGraph() = default;
  explicit MutualGraph(const StrategyProfile& profile);
  // Builds from neighbour masks; the caller guarantees symmetry.
  MutualGraph(int n, std::vector<PlayerMask> neighbours);

  int n() const { return static_cast<int>(neighbours_.size()); }
  // Neighbours of the player, excluding itself.
  PlayerMask neighbours(int player) const { return neighbours_[player - 1]; }
  bool adjacent(int a, int b) const {
    return (neighbours_[a - 1] & player_bit(b)) != 0;
  }
  bool is_clique(PlayerMask members) const;

  // One bit per unordered pair (i < j), ordered (1,2), (1,3), ..., (n-1,n).
  std::uint32_t edge_code() const;
  static MutualGraph from_edge_code(int n, std::uint32_t code);
  static int edge_index(int n, int a, int b);

  friend bool operator==(const MutualGraph&, const MutualGraph&) = default;

 private:
  std::vector<PlayerMask> neighbours_;
};

struct FormedPartitions {
  std::vector<CPartition> partitions;  // sorted
  bool unique = true;
};

// All set partitions of {1..n}, by restricted growth strings. Cached.
const std::vector<CPartition>& all_set_partitions(int n);

// True iff a != b and every coalition of b lies inside a coalition of a,
// i.e. a is a strict coarsening of b.
bool is_better(const CPartition& a, const CPartition& b);

// Partitions whose coalitions are cliques and in which no two coalitions
// could be merged into a clique.
FormedPartitions formed_partitions(const MutualGraph& graph);
FormedPartitions formed_partitions(const StrategyProfile& profile);

// The player's coalition split into {player} and the rest. Identity when the
// player is already alone.
CPartition udp(const CPartition& partition, int player);

// Size-only sufficient condition for weakness: m* > (k+1)^2 / k^2.
bool is_weak_criterion(const CPartition& partition);

// True iff some player in a coalition of size >= 2 strictly gains by
// leaving alone from the profile in which each player wishes exactly for its
// own coalition.
bool is_weak_exact(const CPartition& partition, const GameConfig& config);

// The profile in which every player wishes for exactly its own coalition.
// It forms the partition uniquely.
StrategyProfile generating_profile(const CPartition& partition);

}  // namespace coalition

#endif  // COALITION_PARTITION_HPP
