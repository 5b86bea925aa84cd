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

#ifndef COALITION_GAME_HPP
#define COALITION_GAME_HPP

// Shared vocabulary of the coalition-formation game: configurations,
// coalitions, partitions of the cooperating players, strategy profiles and
// partition labels.
//
// Cooperating players (C-players) are numbered 1..n. The adamant player is
// player 0; it never joins a coalition, so every partition here is a
// partition of {1..n} with the adamant singleton left implicit.

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coalition {

inline constexpr int kMaxPlayers = 16;

// Bit (i - 1) set <=> C-player i is a member.
using PlayerMask = std::uint32_t;

inline constexpr PlayerMask player_bit(int player) {
  return PlayerMask{1} << (player - 1);
}

inline constexpr PlayerMask all_players(int n) {
  return n >= 32 ? ~PlayerMask{0} : (PlayerMask{1} << n) - 1;
}

std::vector<int> members_of(PlayerMask mask);

// Tolerance used when comparing closed-form utilities and thresholds.
inline constexpr double kUtilityTolerance = 1e-12;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Parameters of one game instance. lambda0 == eta * lambda always holds;
// eta == 0 is exactly the game without an adamant player.
struct GameConfig {
  int n = 1;
  double eta = 1.0;
  double lambda = 1.0;
  double lambda0 = 1.0;
  double gamma = 1.0;
  double action_cap = 3.0;
  bool adamant_present = true;

  // action_cap defaults to 2n/gamma.
  static GameConfig with_adamant(int n, double eta, double lambda = 1.0,
                                 double gamma = 1.0);
  static GameConfig without_adamant(int n, double lambda = 1.0,
                                    double gamma = 1.0);

  // Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

// A nonempty set of C-players, stored canonically as a bitmask.
class Coalition {
 public:
  Coalition() = default;
  Coalition(std::initializer_list<int> members);
  static Coalition from_mask(PlayerMask mask);

  PlayerMask mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int player) const { return (mask_ & player_bit(player)) != 0; }
  int smallest() const;
  std::vector<int> members() const { return members_of(mask_); }

  // "{1,2,3}"
  std::string to_string() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  PlayerMask mask_ = 0;
};

// A partition of {1..n} into C-coalitions, kept sorted by smallest member.
class CPartition {
 public:
  CPartition() = default;
  // Throws std::invalid_argument unless the coalitions are nonempty,
  // pairwise disjoint and cover {1..n}.
  CPartition(int n, std::vector<Coalition> coalitions);

  static CPartition grand_coalition(int n);
  static CPartition all_alone(int n);
  // Parses the canonical text form "{1,2}|{3}".
  static CPartition parse(int n, std::string_view text);

  int n() const { return n_; }
  int k() const { return static_cast<int>(coalitions_.size()); }
  const std::vector<Coalition>& coalitions() const { return coalitions_; }
  // Coalition sizes in descending order.
  std::vector<int> sizes() const;
  int m_star() const;
  const Coalition& coalition_of(int player) const;

  std::string to_string() const;

  friend bool operator==(const CPartition&, const CPartition&) = default;
  friend bool operator<(const CPartition& a, const CPartition& b);

 private:
  int n_ = 0;
  std::vector<Coalition> coalitions_;
};

// wishes[i - 1] is the set x_i of players that player i wants to join.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  // Throws std::invalid_argument unless every x_i contains i and only
  // players in {1..n}.
  explicit StrategyProfile(std::vector<PlayerMask> wishes);

  static StrategyProfile all_alone(int n);
  static StrategyProfile grand_coalition(int n);
  // Parses "1,2;1,2,3;1,2,3".
  static StrategyProfile parse(std::string_view text);

  int n() const { return static_cast<int>(wishes_.size()); }
  PlayerMask wish(int player) const { return wishes_[player - 1]; }
  const std::vector<PlayerMask>& wishes() const { return wishes_; }
  StrategyProfile with_wish(int player, PlayerMask wish) const;

  std::string to_string() const;

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
  // Row-by-row comparison of the wish bitmasks, player 1 first.
  friend bool operator<(const StrategyProfile& a, const StrategyProfile& b) {
    return a.wishes_ < b.wishes_;
  }

 private:
  std::vector<PlayerMask> wishes_;
};

enum class PartitionClass {
  kGrandCoalition,
  kAllAlone,
  kTwoTwo,
  kGeneral,  // any other partition with k C-coalitions
};

struct PartitionLabel {
  PartitionClass partition_class = PartitionClass::kGeneral;
  int k = 0;
  std::vector<int> sizes;  // descending
  bool significant = false;

  // "GC", "ALC", "TTC" or "P<k>", with a trailing degree sign when the
  // adamant player is insignificant.
  std::string display() const;

  friend bool operator==(const PartitionLabel&,
                         const PartitionLabel&) = default;
};

// Suffix marking an insignificant adamant player.
inline constexpr std::string_view kInsignificantMark = "°";

// True when the adamant player earns a positive equilibrium utility against
// k C-coalitions: eta > (k - 1) / k, strictly.
bool is_significant(int k, const GameConfig& config);

PartitionLabel classify(const CPartition& partition, const GameConfig& config);

// Lexicographically least relabeling of the profile (players are
// symmetric). Idempotent.
StrategyProfile canonicalize_profile(const StrategyProfile& profile);

// Relabels player i to permutation[i - 1] (1-based targets).
StrategyProfile relabel(const StrategyProfile& profile,
                        const std::vector<int>& permutation);
CPartition relabel(const CPartition& partition,
                   const std::vector<int>& permutation);

}  // namespace coalition

#endif  // COALITION_GAME_HPP
