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

#ifndef COALITION_EQUILIBRIUM_HPP
#define COALITION_EQUILIBRIUM_HPP

// Pure Nash equilibria of the coalition-formation game, social optima and
// the price of anarchy.
//
// Equilibria are found by exhaustive search. Utilities only depend on the
// mutual graph of a profile, so the search tabulates the worst share of
// every player in every graph once per eta and checks each profile's
// unilateral deviations by table lookup. With symmetry reduction only one
// profile per relabeling orbit is visited.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coalition/game.hpp"
#include "coalition/partition.hpp"

namespace coalition {

// Largest n the exhaustive search accepts, and the largest n it accepts
// without symmetry reduction.
inline constexpr int kMaxSearchPlayers = 6;
inline constexpr int kMaxUnreducedPlayers = 4;

struct NePartition {
  PartitionLabel label;
  CPartition representative;
};

struct SocialOptimum {
  double value = 0.0;
  std::vector<PartitionLabel> classes;  // every partition shape at an argmax k
};

struct EquilibriumReport {
  GameConfig config;
  std::vector<StrategyProfile> ne_profiles;  // canonical, sorted
  std::size_t profiles_examined = 0;
  std::vector<NePartition> ne_partitions;  // one per distinct label
  bool multiple_partition_ne = false;
  double worst_ne_sum = 0.0;
  double so_value = 0.0;
  std::vector<PartitionLabel> so_partition_classes;
  double poa = 0.0;

  // Distinct display labels, ordered by k then text.
  std::vector<std::string> ne_labels() const;
  std::vector<std::string> so_labels() const;
};

// Orders labels by k, then display text, then sizes.
bool label_less(const PartitionLabel& a, const PartitionLabel& b);

// Every wish set of the player that maximizes its utility against the rest
// of the profile. Evaluated from the definitions, without tables.
std::vector<PlayerMask> best_response_set(const StrategyProfile& profile,
                                          int player, const GameConfig& config);
bool is_nash(const StrategyProfile& profile, const GameConfig& config);

// One representative per relabeling orbit (the least member), in
// increasing order. n <= kMaxSearchPlayers.
std::vector<StrategyProfile> canonical_profiles(int n);
std::size_t canonical_profile_count(int n);

// Fills the equilibrium fields of the report (not SO or PoA).
// Throws BudgetExceeded for n > kMaxSearchPlayers, or for
// n > kMaxUnreducedPlayers without symmetry reduction.
EquilibriumReport enumerate_nash(const GameConfig& config,
                                 bool use_symmetry = true);

SocialOptimum social_optimum(const GameConfig& config);

// Social optimum divided by the smallest coalition sum over all partitions
// formed at equilibrium.
double price_of_anarchy(const GameConfig& config, bool use_symmetry = true);

// Equilibria, social optimum and price of anarchy together.
EquilibriumReport analyze(const GameConfig& config, bool use_symmetry = true);

// True iff no equilibrium profile forms more than one partition.
bool verify_no_multiple_partition_ne(const GameConfig& config);

// True iff no partition formed uniquely by an equilibrium profile is weak
// (is_weak_exact).
bool verify_weak_partitions_not_ne(const GameConfig& config);

struct MultiplePartitionCensus {
  std::size_t profiles = 0;            // full profile space
  std::size_t multiple = 0;            // profiles forming > 1 partition
  std::size_t multiple_equilibria = 0;  // ... that are also equilibria
};

// Scans the full profile space. n <= kMaxUnreducedPlayers + 1.
MultiplePartitionCensus census_multiple_partitions(const GameConfig& config);

}  // namespace coalition

#endif  // COALITION_EQUILIBRIUM_HPP
