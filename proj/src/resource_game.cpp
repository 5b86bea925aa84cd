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

#include "coalition/resource_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace coalition {
namespace {

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
}

}  // namespace

double coalition_value(int k, const GameConfig& config) {
  check_k(k);
  if (is_significant(k, config)) {
    const double d = 1.0 + k * config.eta;
    return 1.0 / (d * d);
  }
  return 1.0 / (static_cast<double>(k) * k);
}

PartitionOutcome closed_form_outcome(int k, const GameConfig& config) {
  check_k(k);
  PartitionOutcome out;
  out.significant = is_significant(k, config);
  const double value = coalition_value(k, config);
  double action;
  if (out.significant) {
    const double lam = config.lambda, lam0 = config.lambda0, g = config.gamma;
    const double d = lam + k * lam0;
    action = k * lam * lam0 / (g * d * d);
    out.adamant_action = k * lam * ((1 - k) * lam + k * lam0) / (g * d * d);
    const double r = ((1 - k) + k * config.eta) / (1 + k * config.eta);
    out.adamant_utility = r * r;
  } else {
    // Symmetric k-player game; the adamant player sits out.
    action = (k - 1) / (config.gamma * k * k);
  }
  out.coalition_utility.assign(k, value);
  out.coalition_action.assign(k, action);
  return out;
}

PartitionOutcome coalition_utilities(const CPartition& partition,
                                     const GameConfig& config) {
  if (partition.n() != config.n)
    throw std::invalid_argument("partition is over a different player set");
  PartitionOutcome out = closed_form_outcome(partition.k(), config);
  out.coalitions = partition.coalitions();
  return out;
}

ShareVector player_share(const CPartition& partition, const GameConfig& config) {
  const double value = coalition_value(partition.k(), config);
  ShareVector sv;
  sv.shares.assign(partition.n(), 0.0);
  for (const Coalition& c : partition.coalitions())
    for (int p : c.members()) sv.shares[p - 1] = value / c.size();
  return sv;
}

ShareVector profile_utility(const StrategyProfile& profile,
                            const GameConfig& config) {
  ShareVector sv;
  sv.shares.assign(profile.n(), std::numeric_limits<double>::infinity());
  for (const CPartition& p : formed_partitions(profile).partitions) {
    ShareVector s = player_share(p, config);
    for (int i = 0; i < profile.n(); ++i)
      sv.shares[i] = std::min(sv.shares[i], s.shares[i]);
  }
  return sv;
}

PartitionOutcome numeric_rsg_ne(int k, const GameConfig& config, double tol,
                                const OracleOptions& options) {
  check_k(k);
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (!config.adamant_present && k == 1) {
    // A lone player takes the whole resource at vanishing cost.
    PartitionOutcome out;
    out.coalition_utility = {1.0};
    out.coalition_action = {0.0};
    return out;
  }

  const double g = config.gamma;
  std::vector<double> w;  // index 0 is the adamant player when present
  if (config.adamant_present) w.push_back(config.lambda0);
  const std::size_t first = w.size();
  for (int m = 0; m < k; ++m) w.push_back(config.lambda);

  std::vector<double> a(w.size(), 0.5 / g), br(w.size());
  double residual = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int it = 0; it < options.max_iters; ++it) {
    double total = 0;
    for (std::size_t j = 0; j < w.size(); ++j) total += w[j] * a[j];
    residual = 0;
    double scale = 1.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const double others = total - w[j] * a[j];
      double best =
          others > 0 ? std::sqrt(others / (g * w[j])) - others / w[j] : 0.0;
      best = std::clamp(best, 0.0, config.action_cap);
      br[j] = best;
      residual = std::max(residual, std::abs(best - a[j]));
      scale = std::max(scale, a[j]);
    }
    if (residual <= 1e-3 * tol * scale) {
      converged = true;
      break;
    }
    for (std::size_t j = 0; j < w.size(); ++j)
      a[j] = (1 - options.damping) * a[j] + options.damping * br[j];
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "best-response iteration did not converge for k=" << k
        << ", eta=" << config.eta << " (residual " << residual << ")";
    throw NonConvergence(msg.str(), residual);
  }

  double total = 0;
  for (std::size_t j = 0; j < w.size(); ++j) total += w[j] * a[j];
  auto utility = [&](std::size_t j) {
    return (total > 0 ? w[j] * a[j] / total : 0.0) - g * a[j];
  };
  PartitionOutcome out;
  out.significant = is_significant(k, config);
  for (std::size_t j = first; j < w.size(); ++j) {
    out.coalition_utility.push_back(utility(j));
    out.coalition_action.push_back(a[j]);
  }
  if (config.adamant_present) {
    out.adamant_utility = utility(0);
    out.adamant_action = a[0];
  }
  return out;
}

double max_deviation(const PartitionOutcome& a, const PartitionOutcome& b) {
  if (a.coalition_utility.size() != b.coalition_utility.size())
    throw std::invalid_argument("outcomes have different coalition counts");
  double d = std::max(std::abs(a.adamant_utility - b.adamant_utility),
                      std::abs(a.adamant_action - b.adamant_action));
  for (std::size_t m = 0; m < a.coalition_utility.size(); ++m) {
    d = std::max(d, std::abs(a.coalition_utility[m] - b.coalition_utility[m]));
    d = std::max(d, std::abs(a.coalition_action[m] - b.coalition_action[m]));
  }
  return d;
}

double coalition_sum(int k, const GameConfig& config) {
  return k * coalition_value(k, config);
}

double coalition_sum(const CPartition& partition, const GameConfig& config) {
  return coalition_sum(partition.k(), config);
}

}  // namespace coalition
