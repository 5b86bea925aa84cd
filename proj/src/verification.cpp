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

#include "coalition/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "coalition/equilibrium.hpp"
#include "coalition/game.hpp"
#include "coalition/partition.hpp"
#include "coalition/regimes.hpp"
#include "coalition/resource_game.hpp"

namespace coalition {
namespace {

// Every profile of n players, by index.
StrategyProfile profile_at(std::size_t index, int n) {
  std::vector<PlayerMask> w(n);
  int bit = 0;
  for (int p = 1; p <= n; ++p) {
    w[p - 1] = player_bit(p);
    for (int q = 1; q <= n; ++q) {
      if (q == p) continue;
      if (index >> bit++ & 1u) w[p - 1] |= player_bit(q);
    }
  }
  return StrategyProfile(std::move(w));
}

std::size_t profile_space(int n) { return std::size_t{1} << (n * (n - 1)); }

std::vector<double> core_grid() { return {1e-3, 0.01, 0.1, 0.3, 0.5, 0.75, 1, 2, 5, 10}; }

struct Failure {
  std::ostringstream text;
  int count = 0;
  void add(const std::string& what) {
    if (count++ < 3) text << (count > 1 ? "; " : "") << what;
  }
  std::string detail(const std::string& ok) const {
    if (count == 0) return ok;
    return std::to_string(count) + " failure(s): " + text.str();
  }
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

CheckResult alc_always_equilibrium(const VerifyOptions& opt) {
  Failure f;
  for (int n = 1; n <= opt.max_n; ++n)
    for (double eta : verification_eta_grid())
      if (!is_nash(StrategyProfile::all_alone(n), GameConfig::with_adamant(n, eta)))
        f.add("n=" + std::to_string(n) + " eta=" + num(eta));
  return {"all-alone profile is an equilibrium", f.count == 0,
          f.detail("n<=" + std::to_string(opt.max_n) + " across the eta grid")};
}

CheckResult large_n_only_alc(const VerifyOptions& opt) {
  Failure f;
  int runs = 0;
  for (int n = 5; n <= std::min(opt.max_n, 6); ++n) {
    const double edge = (n - 1.0) / n;
    for (double eta : {0.1, 0.5, edge - 0.02, edge + 0.02, 1.0, 2.0, 5.0}) {
      const EquilibriumReport r = enumerate_nash(GameConfig::with_adamant(n, eta));
      ++runs;
      const std::string want = eta > edge ? "ALC" : "ALC°";
      if (r.ne_labels() != std::vector<std::string>{want})
        f.add("n=" + std::to_string(n) + " eta=" + num(eta));
      if (r.multiple_partition_ne)
        f.add("multi-partition NE at n=" + std::to_string(n) + " eta=" + num(eta));
    }
  }
  if (runs == 0) return {"n > 4: only ALC is an equilibrium partition", true, "skipped (max_n < 5)"};
  return {"n > 4: only ALC is an equilibrium partition", f.count == 0,
          f.detail(std::to_string(runs) + " configurations, no multi-partition equilibria")};
}

CheckResult poa_limits(const VerifyOptions& opt) {
  Failure f;
  std::ostringstream ok;
  for (int n = 2; n <= opt.max_n; ++n)
    for (double eta : {1e3, 1e-3}) {
      const double poa = price_of_anarchy(GameConfig::with_adamant(n, eta));
      if (!(std::abs(poa - n) < 0.05 * n))
        f.add("n=" + std::to_string(n) + " eta=" + num(eta) + " PoA " + num(poa));
    }
  return {"PoA tends to n for extreme eta", f.count == 0, f.detail("|PoA - n| < 0.05 n")};
}

CheckResult weak_criterion_implies_exact(const VerifyOptions&) {
  Failure f;
  int checked = 0;
  for (int n = 1; n <= kMaxSearchPlayers; ++n)
    for (const CPartition& p : all_set_partitions(n)) {
      if (!is_weak_criterion(p)) continue;
      for (double eta : verification_eta_grid()) {
        ++checked;
        if (!is_weak_exact(p, GameConfig::with_adamant(n, eta)))
          f.add(p.to_string() + " eta=" + num(eta));
      }
    }
  return {"size criterion implies weakness", f.count == 0,
          f.detail(std::to_string(checked) + " (partition, eta) pairs, n<=6")};
}

CheckResult large_n_non_alc_weak(const VerifyOptions&) {
  Failure f;
  for (int n = 5; n <= kMaxSearchPlayers; ++n)
    for (const CPartition& p : all_set_partitions(n))
      if (p.k() != n && !is_weak_criterion(p)) f.add(p.to_string());
  return {"n > 4: every partition but ALC meets the weakness criterion", f.count == 0,
          f.detail("n=5,6")};
}

CheckResult weak_partitions_not_ne(const VerifyOptions& opt) {
  Failure f;
  for (int n = 1; n <= std::min(opt.max_n, 5); ++n)
    for (double eta : verification_eta_grid())
      if (!verify_weak_partitions_not_ne(GameConfig::with_adamant(n, eta)))
        f.add("n=" + std::to_string(n) + " eta=" + num(eta));
  return {"weak partitions are never formed uniquely at equilibrium", f.count == 0,
          f.detail("n<=" + std::to_string(std::min(opt.max_n, 5)) + " across the eta grid")};
}

CheckResult share_conservation(const VerifyOptions&) {
  Failure f;
  for (int n = 1; n <= kMaxSearchPlayers; ++n)
    for (const CPartition& p : all_set_partitions(n))
      for (double eta : core_grid()) {
        const GameConfig c = GameConfig::with_adamant(n, eta);
        const PartitionOutcome o = coalition_utilities(p, c);
        const ShareVector s = player_share(p, c);
        for (std::size_t m = 0; m < o.coalitions.size(); ++m) {
          double sum = 0;
          for (int q : o.coalitions[m].members()) sum += s.of(q);
          if (std::abs(sum - o.coalition_utility[m]) > 1e-12)
            f.add(p.to_string() + " eta=" + num(eta));
        }
      }
  return {"shares add up to coalition utility", f.count == 0, f.detail("n<=6, tolerance 1e-12")};
}

CheckResult threshold_continuity(const VerifyOptions&) {
  Failure f;
  for (int k = 1; k <= kMaxSearchPlayers; ++k) {
    const double edge = (k - 1.0) / k;
    if (edge == 0) continue;  // eta = 0 means no adamant player
    const GameConfig at = GameConfig::with_adamant(k, edge);
    const PartitionOutcome o = closed_form_outcome(k, at);
    const double sig = 1.0 / ((1 + k * edge) * (1 + k * edge));
    if (std::abs(sig - 1.0 / (k * k)) > 1e-12) f.add("branches differ at k=" + std::to_string(k));
    if (o.adamant_utility != 0.0) f.add("adamant utility nonzero at k=" + std::to_string(k));
    const GameConfig above = GameConfig::with_adamant(k, edge + 1e-9);
    const PartitionOutcome a = closed_form_outcome(k, above);
    if (max_deviation(a, o) > 1e-7) f.add("jump at k=" + std::to_string(k));
  }
  return {"utilities are continuous at the significance threshold", f.count == 0, f.detail("k<=6")};
}

CheckResult oracle_grid(const VerifyOptions&) {
  Failure f;
  double worst = 0;
  for (int k = 1; k <= 6; ++k)
    for (double eta : {0.1, 0.3, (k - 1.0) / k - 0.01, (k - 1.0) / k + 0.01, 1.0, 2.0, 5.0}) {
      if (eta <= 0) continue;
      const GameConfig c = GameConfig::with_adamant(6, eta);
      try {
        const double d = max_deviation(numeric_rsg_ne(k, c, 1e-6), closed_form_outcome(k, c));
        worst = std::max(worst, d);
        if (d >= 1e-6) f.add("k=" + std::to_string(k) + " eta=" + num(eta) + " dev " + num(d));
      } catch (const NonConvergence& e) {
        f.add(e.what());
      }
    }
  return {"numeric oracle matches the closed form", f.count == 0,
          f.detail("max deviation " + num(worst))};
}

CheckResult social_optimum_brute_force(const VerifyOptions&) {
  Failure f;
  for (int n = 1; n <= 4; ++n)
    for (double eta : verification_eta_grid()) {
      const GameConfig c = GameConfig::with_adamant(n, eta);
      double best = -1;
      for (const CPartition& p : all_set_partitions(n)) best = std::max(best, coalition_sum(p, c));
      if (std::abs(best - social_optimum(c).value) > 1e-12)
        f.add("n=" + std::to_string(n) + " eta=" + num(eta));
    }
  return {"social optimum matches partition brute force", f.count == 0, f.detail("n<=4")};
}

CheckResult symmetry_soundness(const VerifyOptions&) {
  Failure f;
  for (int n = 1; n <= kMaxUnreducedPlayers; ++n)
    for (double eta : verification_eta_grid()) {
      const GameConfig c = GameConfig::with_adamant(n, eta);
      if (enumerate_nash(c, true).ne_profiles != enumerate_nash(c, false).ne_profiles)
        f.add("n=" + std::to_string(n) + " eta=" + num(eta));
    }
  return {"symmetry reduction keeps every equilibrium orbit", f.count == 0, f.detail("n<=4")};
}

CheckResult relabeling_invariance(const VerifyOptions&) {
  Failure f;
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < profile_space(n); ++i) {
      const StrategyProfile x = profile_at(i, n);
      const FormedPartitions base = formed_partitions(x);
      std::iota(perm.begin(), perm.end(), 1);
      do {
        std::vector<CPartition> mapped;
        for (const CPartition& p : base.partitions) mapped.push_back(relabel(p, perm));
        std::sort(mapped.begin(), mapped.end());
        if (formed_partitions(relabel(x, perm)).partitions != mapped) f.add(x.to_string());
        for (const CPartition& p : base.partitions)
          for (double eta : {0.3, 0.9}) {
            const GameConfig c = GameConfig::with_adamant(n, eta);
            if (!(classify(p, c) == classify(relabel(p, perm), c))) f.add(p.to_string());
          }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return {"formation and labels commute with relabeling", f.count == 0, f.detail("n<=3, all profiles")};
}

CheckResult unilateral_split(const VerifyOptions&) {
  Failure f;
  std::size_t checked = 0;
  for (int n = 1; n <= 4; ++n)
    for (std::size_t i = 0; i < profile_space(n); ++i) {
      const StrategyProfile x = profile_at(i, n);
      const FormedPartitions fp = formed_partitions(x);
      if (!fp.unique) continue;
      for (int p = 1; p <= n; ++p) {
        ++checked;
        const FormedPartitions dev = formed_partitions(x.with_wish(p, player_bit(p)));
        if (!dev.unique || dev.partitions.front() != udp(fp.partitions.front(), p))
          f.add(x.to_string() + " player " + std::to_string(p));
      }
    }
  return {"leaving alone splits exactly the leaver's coalition", f.count == 0,
          f.detail(std::to_string(checked) + " (profile, player) pairs, n<=4")};
}

}  // namespace

std::vector<double> verification_eta_grid() {
  std::vector<double> grid = {1e-3, 0.1, 0.3, 1, 2, 5, 1e3};
  const double constants[] = {threshold::gc_equilibrium_low_n3(),
                              threshold::sqrt2_minus_1(),
                              0.5,
                              threshold::p2_equilibrium_upper(),
                              2.0 / 3.0,
                              threshold::inv_sqrt2(),
                              0.75,
                              0.8,
                              5.0 / 6.0,
                              threshold::one_plus_sqrt2(),
                              threshold::one_plus_sqrt3()};
  for (double c : constants) {
    grid.push_back(c - 0.02);
    grid.push_back(c + 0.02);
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

std::vector<CheckResult> run_property_suite(const VerifyOptions& options) {
  using Check = CheckResult (*)(const VerifyOptions&);
  const Check checks[] = {alc_always_equilibrium,  large_n_only_alc,
                          poa_limits,              weak_criterion_implies_exact,
                          large_n_non_alc_weak,    weak_partitions_not_ne,
                          share_conservation,      threshold_continuity,
                          oracle_grid,             social_optimum_brute_force,
                          symmetry_soundness,      relabeling_invariance,
                          unilateral_split};
  std::vector<CheckResult> out;
  for (Check check : checks) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = check(options);
    r.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace coalition
