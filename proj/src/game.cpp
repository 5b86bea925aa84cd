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

#include "coalition/game.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>

namespace coalition {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw std::invalid_argument(what);
}

std::string join_members(PlayerMask mask) {
  std::string out;
  for (int p : members_of(mask)) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

// Parses "1,2,3" into a mask. Empty input gives 0.
PlayerMask parse_member_list(std::string_view text) {
  PlayerMask mask = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    if (token.empty() || token.size() > 2 ||
        !std::all_of(token.begin(), token.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      invalid("bad player id '" + std::string(token) + "'");
    int player = std::stoi(std::string(token));
    if (player < 1 || player > kMaxPlayers)
      invalid("player id out of range: " + std::to_string(player));
    if (mask & player_bit(player))
      invalid("duplicate player " + std::to_string(player));
    mask |= player_bit(player);
    pos = end + 1;
  }
  return mask;
}

}  // namespace

std::vector<int> members_of(PlayerMask mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

GameConfig GameConfig::with_adamant(int n, double eta, double lambda,
                                    double gamma) {
  GameConfig c;
  c.n = n;
  c.eta = eta;
  c.lambda = lambda;
  c.lambda0 = eta * lambda;
  c.gamma = gamma;
  c.action_cap = 2.0 * n / gamma;
  c.adamant_present = true;
  c.validate();
  return c;
}

GameConfig GameConfig::without_adamant(int n, double lambda, double gamma) {
  GameConfig c;
  c.n = n;
  c.eta = 0.0;
  c.lambda = lambda;
  c.lambda0 = 0.0;
  c.gamma = gamma;
  c.action_cap = 2.0 * n / gamma;
  c.adamant_present = false;
  c.validate();
  return c;
}

void GameConfig::validate() const {
  if (n < 1 || n > kMaxPlayers)
    invalid("n must be in 1.." + std::to_string(kMaxPlayers));
  if (!(lambda > 0) || !std::isfinite(lambda)) invalid("lambda must be positive");
  if (!(gamma > 0) || !std::isfinite(gamma)) invalid("gamma must be positive");
  if (!(eta >= 0) || !std::isfinite(eta)) invalid("eta must be nonnegative");
  if (!(lambda0 >= 0) || !std::isfinite(lambda0))
    invalid("lambda0 must be nonnegative");
  if (std::abs(eta - lambda0 / lambda) > 1e-12 * std::max(1.0, eta))
    invalid("eta must equal lambda0 / lambda");
  if ((eta == 0) == adamant_present)
    invalid(adamant_present ? "an adamant player needs eta > 0"
                            : "eta must be 0 without an adamant player");
  if (!(action_cap > n / gamma)) invalid("action_cap must exceed n / gamma");
}

Coalition::Coalition(std::initializer_list<int> members) {
  for (int p : members) {
    if (p < 1 || p > kMaxPlayers) invalid("player id out of range");
    if (mask_ & player_bit(p)) invalid("duplicate player in coalition");
    mask_ |= player_bit(p);
  }
  if (mask_ == 0) invalid("empty coalition");
}

Coalition Coalition::from_mask(PlayerMask mask) {
  if (mask == 0) invalid("empty coalition");
  if (mask & ~all_players(kMaxPlayers)) invalid("player id out of range");
  Coalition c;
  c.mask_ = mask;
  return c;
}

int Coalition::size() const { return std::popcount(mask_); }

int Coalition::smallest() const { return std::countr_zero(mask_) + 1; }

std::string Coalition::to_string() const {
  return "{" + join_members(mask_) + "}";
}

CPartition::CPartition(int n, std::vector<Coalition> coalitions)
    : n_(n), coalitions_(std::move(coalitions)) {
  if (n < 1 || n > kMaxPlayers) invalid("n out of range");
  PlayerMask seen = 0;
  for (const Coalition& c : coalitions_) {
    if (c.empty()) invalid("empty coalition in partition");
    if (seen & c.mask()) invalid("coalitions overlap");
    seen |= c.mask();
  }
  if (seen != all_players(n))
    invalid("coalitions do not cover players 1.." + std::to_string(n));
  std::sort(coalitions_.begin(), coalitions_.end(),
            [](const Coalition& a, const Coalition& b) {
              return a.smallest() < b.smallest();
            });
}

CPartition CPartition::grand_coalition(int n) {
  return CPartition(n, {Coalition::from_mask(all_players(n))});
}

CPartition CPartition::all_alone(int n) {
  std::vector<Coalition> cs;
  for (int p = 1; p <= n; ++p) cs.push_back(Coalition::from_mask(player_bit(p)));
  return CPartition(n, std::move(cs));
}

CPartition CPartition::parse(int n, std::string_view text) {
  std::vector<Coalition> cs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('|', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(pos, end - pos);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front())))
      part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back())))
      part.remove_suffix(1);
    if (part.size() < 2 || part.front() != '{' || part.back() != '}')
      invalid("bad coalition '" + std::string(part) + "'");
    PlayerMask mask = parse_member_list(part.substr(1, part.size() - 2));
    cs.push_back(Coalition::from_mask(mask));
    pos = end + 1;
  }
  return CPartition(n, std::move(cs));
}

std::vector<int> CPartition::sizes() const {
  std::vector<int> out;
  for (const Coalition& c : coalitions_) out.push_back(c.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

int CPartition::m_star() const {
  int best = 0;
  for (const Coalition& c : coalitions_) best = std::max(best, c.size());
  return best;
}

const Coalition& CPartition::coalition_of(int player) const {
  for (const Coalition& c : coalitions_)
    if (c.contains(player)) return c;
  invalid("player " + std::to_string(player) + " not in partition");
}

std::string CPartition::to_string() const {
  std::string out;
  for (const Coalition& c : coalitions_) {
    if (!out.empty()) out += '|';
    out += c.to_string();
  }
  return out;
}

bool operator<(const CPartition& a, const CPartition& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(
      a.coalitions_.begin(), a.coalitions_.end(), b.coalitions_.begin(),
      b.coalitions_.end(), [](const Coalition& x, const Coalition& y) {
        return x.mask() < y.mask();
      });
}

StrategyProfile::StrategyProfile(std::vector<PlayerMask> wishes)
    : wishes_(std::move(wishes)) {
  const int n = static_cast<int>(wishes_.size());
  if (n < 1 || n > kMaxPlayers) invalid("profile size out of range");
  for (int p = 1; p <= n; ++p) {
    PlayerMask w = wishes_[p - 1];
    if (!(w & player_bit(p)))
      invalid("wish set of player " + std::to_string(p) + " must contain it");
    if (w & ~all_players(n))
      invalid("wish set of player " + std::to_string(p) + " names unknown players");
  }
}

StrategyProfile StrategyProfile::all_alone(int n) {
  std::vector<PlayerMask> w(n);
  for (int p = 1; p <= n; ++p) w[p - 1] = player_bit(p);
  return StrategyProfile(std::move(w));
}

StrategyProfile StrategyProfile::grand_coalition(int n) {
  return StrategyProfile(std::vector<PlayerMask>(n, all_players(n)));
}

StrategyProfile StrategyProfile::parse(std::string_view text) {
  std::vector<PlayerMask> w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    w.push_back(parse_member_list(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  return StrategyProfile(std::move(w));
}

StrategyProfile StrategyProfile::with_wish(int player, PlayerMask wish) const {
  std::vector<PlayerMask> w = wishes_;
  w[player - 1] = wish;
  return StrategyProfile(std::move(w));
}

std::string StrategyProfile::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < wishes_.size(); ++i) {
    if (i) out += ';';
    out += join_members(wishes_[i]);
  }
  return out;
}

std::string PartitionLabel::display() const {
  std::string out;
  switch (partition_class) {
    case PartitionClass::kGrandCoalition: out = "GC"; break;
    case PartitionClass::kAllAlone: out = "ALC"; break;
    case PartitionClass::kTwoTwo: out = "TTC"; break;
    case PartitionClass::kGeneral: out = "P" + std::to_string(k); break;
  }
  if (!significant) out += kInsignificantMark;
  return out;
}

bool is_significant(int k, const GameConfig& config) {
  if (!config.adamant_present) return false;
  return config.eta > static_cast<double>(k - 1) / k;
}

PartitionLabel classify(const CPartition& partition, const GameConfig& config) {
  if (partition.n() != config.n)
    invalid("partition is over a different player set than the config");
  PartitionLabel label;
  label.k = partition.k();
  label.sizes = partition.sizes();
  label.significant = is_significant(label.k, config);
  if (label.k == 1)
    label.partition_class = PartitionClass::kGrandCoalition;
  else if (label.k == config.n)
    label.partition_class = PartitionClass::kAllAlone;
  else if (config.n == 4 && label.sizes == std::vector<int>{2, 2})
    label.partition_class = PartitionClass::kTwoTwo;
  else
    label.partition_class = PartitionClass::kGeneral;
  return label;
}

StrategyProfile relabel(const StrategyProfile& profile,
                        const std::vector<int>& permutation) {
  const int n = profile.n();
  std::vector<PlayerMask> w(n, 0);
  for (int p = 1; p <= n; ++p) {
    PlayerMask mapped = 0;
    for (int q : members_of(profile.wish(p))) mapped |= player_bit(permutation[q - 1]);
    w[permutation[p - 1] - 1] = mapped;
  }
  return StrategyProfile(std::move(w));
}

CPartition relabel(const CPartition& partition,
                   const std::vector<int>& permutation) {
  std::vector<Coalition> cs;
  for (const Coalition& c : partition.coalitions()) {
    PlayerMask mapped = 0;
    for (int q : c.members()) mapped |= player_bit(permutation[q - 1]);
    cs.push_back(Coalition::from_mask(mapped));
  }
  return CPartition(partition.n(), std::move(cs));
}

StrategyProfile canonicalize_profile(const StrategyProfile& profile) {
  const int n = profile.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  StrategyProfile best = profile;
  do {
    StrategyProfile candidate = relabel(profile, perm);
    if (candidate < best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace coalition
