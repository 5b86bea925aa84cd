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

#ifndef COALITION_RESOURCE_GAME_HPP
#define COALITION_RESOURCE_GAME_HPP

// Equilibrium of the proportional resource-sharing game played between the
// k C-coalitions and the adamant player, in closed form and by a numeric
// best-response oracle.
//
// Player j with weight w_j and action a_j earns w_j a_j / sum_l w_l a_l
// minus gamma a_j. Coalition members pool their actions, so each coalition
// acts as one aggregate player with weight lambda.

#include <vector>

#include "coalition/game.hpp"
#include "coalition/partition.hpp"

namespace coalition {

struct PartitionOutcome {
  // Aligned with the partition's coalition order. Empty when the outcome
  // describes k anonymous aggregate players.
  std::vector<Coalition> coalitions;
  std::vector<double> coalition_utility;
  std::vector<double> coalition_action;
  double adamant_utility = 0.0;
  double adamant_action = 0.0;
  bool significant = false;
};

struct ShareVector {
  std::vector<double> shares;  // shares[i - 1] belongs to player i

  double of(int player) const { return shares[player - 1]; }
};

// Equilibrium utility of each C-coalition when there are k of them:
// 1/(1+k eta)^2 if significant, else 1/k^2.
double coalition_value(int k, const GameConfig& config);

// Closed-form equilibrium for k aggregate C-players.
PartitionOutcome closed_form_outcome(int k, const GameConfig& config);

PartitionOutcome coalition_utilities(const CPartition& partition,
                                     const GameConfig& config);

// Equal split of each coalition's utility among its members.
ShareVector player_share(const CPartition& partition, const GameConfig& config);

// Worst share of each player over every partition the profile forms.
ShareVector profile_utility(const StrategyProfile& profile,
                            const GameConfig& config);

struct OracleOptions {
  double damping = 0.04;
  int max_iters = 10000;
};

// Damped simultaneous best response on the (k+1)-player aggregate game.
// Throws NonConvergence when max_iters is reached.
PartitionOutcome numeric_rsg_ne(int k, const GameConfig& config, double tol,
                                const OracleOptions& options = {});

// Largest absolute difference between utilities and actions of two outcomes
// over the same number of coalitions.
double max_deviation(const PartitionOutcome& a, const PartitionOutcome& b);

// Sum of C-coalition utilities.
double coalition_sum(int k, const GameConfig& config);
double coalition_sum(const CPartition& partition, const GameConfig& config);

}  // namespace coalition

#endif  // COALITION_RESOURCE_GAME_HPP
