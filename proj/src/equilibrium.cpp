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

#include "coalition/equilibrium.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "coalition/parallel.hpp"
#include "coalition/resource_game.hpp"

namespace coalition {
namespace {

// A profile packed as one byte per player, player 1 in the lowest byte.
using ProfileCode = std::uint64_t;
using Rows = std::array<PlayerMask, kMaxSearchPlayers>;

ProfileCode pack(const Rows& rows, int n) {
  ProfileCode code = 0;
  for (int p = 0; p < n; ++p) code |= ProfileCode{rows[p]} << (8 * p);
  return code;
}

Rows unpack(ProfileCode code, int n) {
  Rows rows{};
  for (int p = 0; p < n; ++p) rows[p] = static_cast<PlayerMask>(code >> (8 * p) & 0xff);
  return rows;
}

StrategyProfile to_profile(const Rows& rows, int n) {
  return StrategyProfile(std::vector<PlayerMask>(rows.begin(), rows.begin() + n));
}

void check_budget(int n, bool use_symmetry) {
  if (n > kMaxSearchPlayers)
    throw BudgetExceeded("exhaustive search supports n <= " +
                         std::to_string(kMaxSearchPlayers));
  if (!use_symmetry && n > kMaxUnreducedPlayers)
    throw BudgetExceeded("search without symmetry reduction supports n <= " +
                         std::to_string(kMaxUnreducedPlayers));
}

// Orderly generation of orbit representatives. Rows are fixed in player
// order; a relabeling stays "alive" while its image agrees with the
// profile on a prefix. A smaller image prunes the branch, a larger one
// retires the relabeling.
class CanonicalGenerator {
 public:
  explicit CanonicalGenerator(int n) : n_(n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::array<int, kMaxSearchPlayers> inv{};
      for (int i = 0; i < n; ++i) inv[perm[i]] = i;
      inverse_.push_back(inv);
      std::vector<std::uint8_t> image(std::size_t{1} << n);
      for (PlayerMask m = 0; m < image.size(); ++m) {
        PlayerMask r = 0;
        for (int i = 0; i < n; ++i)
          if (m >> i & 1u) r |= PlayerMask{1} << perm[i];
        image[m] = static_cast<std::uint8_t>(r);
      }
      images_.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::vector<ProfileCode> run() {
    std::vector<Alive> alive;
    // Index 0 is the identity.
    for (std::size_t s = 1; s < images_.size(); ++s) alive.push_back({s, 0});
    out_.clear();
    dfs(0, alive);
    return std::move(out_);
  }

 private:
  struct Alive {
    std::size_t perm;
    int agreed;  // image equals the profile on rows [0, agreed)
  };

  void dfs(int p, const std::vector<Alive>& alive) {
    if (p == n_) {
      out_.push_back(pack(rows_, n_));
      return;
    }
    const PlayerMask self = PlayerMask{1} << p;
    const PlayerMask others = all_players(n_) & ~self;
    std::vector<Alive> next;
    for (PlayerMask sub = 0;; sub = (sub - others) & others) {
      rows_[p] = sub | self;
      next.clear();
      bool prune = false;
      for (const Alive& a : alive) {
        int q = a.agreed;
        bool retired = false;
        while (q <= p) {
          const int src = inverse_[a.perm][q];
          if (src > p) break;
          const PlayerMask mapped = images_[a.perm][rows_[src]];
          if (mapped < rows_[q]) {
            prune = true;
            break;
          }
          if (mapped > rows_[q]) {
            retired = true;
            break;
          }
          ++q;
        }
        if (prune) break;
        if (!retired) next.push_back({a.perm, q});
      }
      if (!prune) dfs(p + 1, next);
      if (sub == others) break;
    }
  }

  int n_;
  std::vector<std::array<int, kMaxSearchPlayers>> inverse_;
  std::vector<std::vector<std::uint8_t>> images_;
  Rows rows_{};
  std::vector<ProfileCode> out_;
};

const std::vector<ProfileCode>& canonical_codes(int n) {
  static std::mutex mu;
  static std::array<std::unique_ptr<std::vector<ProfileCode>>, kMaxSearchPlayers + 1>
      cache;
  check_budget(n, true);
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[n])
    cache[n] = std::make_unique<std::vector<ProfileCode>>(CanonicalGenerator(n).run());
  return *cache[n];
}

// Formed partitions of every mutual graph on n players, reduced to what
// utilities need: k and the coalition size of each player.
struct Shape {
  std::uint8_t k;
  std::array<std::uint8_t, kMaxSearchPlayers> size_of;
};

struct GraphCatalog {
  int n = 0;
  std::size_t graphs = 0;
  std::vector<std::uint32_t> offset;  // shapes of graph g: [offset[g], offset[g+1])
  std::vector<Shape> shapes;
  std::vector<std::uint8_t> multiple;  // graph forms more than one partition
  std::array<std::uint32_t, kMaxSearchPlayers> incident{};
  // edges_to[i][mask]: edge bits joining player i to the players in mask.
  std::array<std::array<std::uint32_t, 1u << kMaxSearchPlayers>, kMaxSearchPlayers>
      edges_to{};

  std::uint32_t graph_code(const Rows& rows) const {
    std::uint32_t code = 0;
    for (int a = 0; a < n; ++a) {
      // Neighbours j > a that a wants and that want a.
      PlayerMask mutual = 0;
      for (int b = a + 1; b < n; ++b)
        if ((rows[a] >> b & 1u) && (rows[b] >> a & 1u)) mutual |= PlayerMask{1} << b;
      code |= edges_to[a][mutual];
    }
    return code;
  }
};

const GraphCatalog& graph_catalog(int n) {
  static std::mutex mu;
  static std::array<std::unique_ptr<GraphCatalog>, kMaxSearchPlayers + 1> cache;
  check_budget(n, true);
  std::lock_guard<std::mutex> lock(mu);
  if (cache[n]) return *cache[n];

  auto cat = std::make_unique<GraphCatalog>();
  cat->n = n;
  const int edges = n * (n - 1) / 2;
  cat->graphs = std::size_t{1} << edges;
  for (int i = 0; i < n; ++i)
    for (PlayerMask m = 0; m < (1u << n); ++m) {
      std::uint32_t bits = 0;
      for (int j = 0; j < n; ++j)
        if (j != i && (m >> j & 1u))
          bits |= std::uint32_t{1} << MutualGraph::edge_index(n, i + 1, j + 1);
      cat->edges_to[i][m] = bits;
      if (m == all_players(n)) cat->incident[i] = bits;
    }
  cat->offset.reserve(cat->graphs + 1);
  cat->multiple.resize(cat->graphs);
  for (std::uint32_t g = 0; g < cat->graphs; ++g) {
    cat->offset.push_back(static_cast<std::uint32_t>(cat->shapes.size()));
    FormedPartitions fp = formed_partitions(MutualGraph::from_edge_code(n, g));
    cat->multiple[g] = !fp.unique;
    for (const CPartition& p : fp.partitions) {
      Shape s{};
      s.k = static_cast<std::uint8_t>(p.k());
      for (const Coalition& c : p.coalitions())
        for (int m : c.members()) s.size_of[m - 1] = static_cast<std::uint8_t>(c.size());
      cat->shapes.push_back(s);
    }
  }
  cat->offset.push_back(static_cast<std::uint32_t>(cat->shapes.size()));
  cache[n] = std::move(cat);
  return *cache[n];
}

// Worst share of every player in every graph for one config.
class NashScanner {
 public:
  explicit NashScanner(const GameConfig& config)
      : n_(config.n), cat_(graph_catalog(config.n)) {
    std::array<double, kMaxSearchPlayers + 1> value{};
    for (int k = 1; k <= n_; ++k) value[k] = coalition_value(k, config);
    util_.assign(cat_.graphs * n_, std::numeric_limits<double>::infinity());
    for (std::size_t g = 0; g < cat_.graphs; ++g)
      for (std::uint32_t s = cat_.offset[g]; s < cat_.offset[g + 1]; ++s) {
        const Shape& sh = cat_.shapes[s];
        for (int i = 0; i < n_; ++i) {
          double& u = util_[g * n_ + i];
          u = std::min(u, value[sh.k] / sh.size_of[i]);
        }
      }
  }

  const GraphCatalog& catalog() const { return cat_; }

  bool is_nash(const Rows& rows) const {
    const std::uint32_t code = cat_.graph_code(rows);
    for (int i = 0; i < n_; ++i) {
      const double u = util_[code * n_ + i];
      PlayerMask wanted_by = 0;
      for (int j = 0; j < n_; ++j)
        if (j != i && (rows[j] >> i & 1u)) wanted_by |= PlayerMask{1} << j;
      const std::uint32_t base = code & ~cat_.incident[i];
      // Player i can only end up adjacent to a subset of those wanting it.
      for (PlayerMask sub = wanted_by;; sub = (sub - 1) & wanted_by) {
        const std::uint32_t alt = base | cat_.edges_to[i][sub];
        if (util_[alt * n_ + i] > u + kUtilityTolerance) return false;
        if (sub == 0) break;
      }
    }
    return true;
  }

 private:
  int n_;
  const GraphCatalog& cat_;
  std::vector<double> util_;
};

std::size_t full_profile_count(int n) {
  return std::size_t{1} << (n * (n - 1));
}

// Mixed-radix decoding: each player contributes n-1 free bits.
Rows full_profile(std::size_t index, int n) {
  Rows rows{};
  for (int p = 0; p < n; ++p) {
    const PlayerMask others = all_players(n) & ~(PlayerMask{1} << p);
    PlayerMask row = PlayerMask{1} << p;
    for (int j = 0, bit = 0; j < n; ++j) {
      if (!(others >> j & 1u)) continue;
      if (index >> (p * (n - 1) + bit) & 1u) row |= PlayerMask{1} << j;
      ++bit;
    }
    rows[p] = row;
  }
  return rows;
}

std::vector<PartitionLabel> shapes_with_k(int n, int k, const GameConfig& config) {
  // Integer partitions of n into exactly k parts, largest first.
  std::vector<PartitionLabel> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int slots, int cap) -> void {
    if (slots == 0) {
      if (remaining == 0) {
        std::vector<Coalition> cs;
        int next = 1;
        for (int size : parts) {
          PlayerMask m = 0;
          for (int t = 0; t < size; ++t) m |= player_bit(next++);
          cs.push_back(Coalition::from_mask(m));
        }
        out.push_back(classify(CPartition(n, std::move(cs)), config));
      }
      return;
    }
    for (int size = std::min(cap, remaining - (slots - 1)); size >= 1; --size) {
      parts.push_back(size);
      self(self, remaining - size, slots - 1, size);
      parts.pop_back();
    }
  };
  rec(rec, n, k, n);
  return out;
}

std::vector<std::string> distinct_displays(const std::vector<PartitionLabel>& labels) {
  std::vector<std::string> out;
  for (const PartitionLabel& l : labels) {
    std::string d = l.display();
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

bool label_less(const PartitionLabel& a, const PartitionLabel& b) {
  if (a.k != b.k) return a.k < b.k;
  const std::string da = a.display(), db = b.display();
  if (da != db) return da < db;
  return a.sizes < b.sizes;
}

std::vector<std::string> EquilibriumReport::ne_labels() const {
  std::vector<PartitionLabel> labels;
  for (const NePartition& p : ne_partitions) labels.push_back(p.label);
  return distinct_displays(labels);
}

std::vector<std::string> EquilibriumReport::so_labels() const {
  return distinct_displays(so_partition_classes);
}

std::vector<PlayerMask> best_response_set(const StrategyProfile& profile,
                                          int player, const GameConfig& config) {
  const int n = profile.n();
  const PlayerMask self = player_bit(player);
  const PlayerMask others = all_players(n) & ~self;
  std::vector<std::pair<PlayerMask, double>> values;
  double best = -std::numeric_limits<double>::infinity();
  for (PlayerMask sub = 0;; sub = (sub - others) & others) {
    const PlayerMask wish = sub | self;
    const double u = profile_utility(profile.with_wish(player, wish), config).of(player);
    values.emplace_back(wish, u);
    best = std::max(best, u);
    if (sub == others) break;
  }
  std::vector<PlayerMask> out;
  for (const auto& [wish, u] : values)
    if (u >= best - kUtilityTolerance) out.push_back(wish);
  return out;
}

bool is_nash(const StrategyProfile& profile, const GameConfig& config) {
  for (int p = 1; p <= profile.n(); ++p) {
    const std::vector<PlayerMask> br = best_response_set(profile, p, config);
    if (std::find(br.begin(), br.end(), profile.wish(p)) == br.end()) return false;
  }
  return true;
}

std::vector<StrategyProfile> canonical_profiles(int n) {
  std::vector<StrategyProfile> out;
  for (ProfileCode c : canonical_codes(n)) out.push_back(to_profile(unpack(c, n), n));
  return out;
}

std::size_t canonical_profile_count(int n) { return canonical_codes(n).size(); }

EquilibriumReport enumerate_nash(const GameConfig& config, bool use_symmetry) {
  config.validate();
  const int n = config.n;
  check_budget(n, use_symmetry);
  const NashScanner scanner(config);

  std::vector<ProfileCode> ne;
  std::size_t examined = 0;
  std::mutex mu;
  if (use_symmetry) {
    const std::vector<ProfileCode>& codes = canonical_codes(n);
    examined = codes.size();
    parallel_for(codes.size(), [&](int, std::size_t begin, std::size_t end) {
      std::vector<ProfileCode> local;
      for (std::size_t i = begin; i < end; ++i)
        if (scanner.is_nash(unpack(codes[i], n))) local.push_back(codes[i]);
      std::lock_guard<std::mutex> lock(mu);
      ne.insert(ne.end(), local.begin(), local.end());
    });
  } else {
    examined = full_profile_count(n);
    parallel_for(examined, [&](int, std::size_t begin, std::size_t end) {
      std::vector<ProfileCode> local;
      for (std::size_t i = begin; i < end; ++i) {
        const Rows rows = full_profile(i, n);
        if (!scanner.is_nash(rows)) continue;
        const StrategyProfile canon = canonicalize_profile(to_profile(rows, n));
        Rows crow{};
        for (int p = 0; p < n; ++p) crow[p] = canon.wishes()[p];
        local.push_back(pack(crow, n));
      }
      std::lock_guard<std::mutex> lock(mu);
      ne.insert(ne.end(), local.begin(), local.end());
    });
  }
  // Packed codes put player 1 in the low byte, so order on the rows instead.
  std::vector<StrategyProfile> profiles;
  {
    std::set<ProfileCode> distinct(ne.begin(), ne.end());
    for (ProfileCode c : distinct) profiles.push_back(to_profile(unpack(c, n), n));
    std::sort(profiles.begin(), profiles.end());
  }

  EquilibriumReport report;
  report.config = config;
  report.profiles_examined = examined;
  report.worst_ne_sum = std::numeric_limits<double>::infinity();
  std::set<std::uint32_t> graphs;
  for (const StrategyProfile& p : profiles) {
    Rows rows{};
    for (int i = 0; i < n; ++i) rows[i] = p.wishes()[i];
    graphs.insert(scanner.catalog().graph_code(rows));
  }
  for (std::uint32_t g : graphs) {
    const FormedPartitions fp = formed_partitions(MutualGraph::from_edge_code(n, g));
    if (!fp.unique) report.multiple_partition_ne = true;
    for (const CPartition& part : fp.partitions) {
      report.worst_ne_sum = std::min(report.worst_ne_sum, coalition_sum(part, config));
      const PartitionLabel label = classify(part, config);
      auto it = std::find_if(report.ne_partitions.begin(), report.ne_partitions.end(),
                             [&](const NePartition& e) { return e.label == label; });
      if (it == report.ne_partitions.end())
        report.ne_partitions.push_back({label, part});
      else if (part < it->representative)
        it->representative = part;
    }
  }
  std::sort(report.ne_partitions.begin(), report.ne_partitions.end(),
            [](const NePartition& a, const NePartition& b) {
              return label_less(a.label, b.label);
            });
  report.ne_profiles = std::move(profiles);
  return report;
}

SocialOptimum social_optimum(const GameConfig& config) {
  config.validate();
  SocialOptimum so;
  so.value = -1;
  for (int k = 1; k <= config.n; ++k) so.value = std::max(so.value, coalition_sum(k, config));
  for (int k = 1; k <= config.n; ++k) {
    if (coalition_sum(k, config) < so.value - kUtilityTolerance) continue;
    for (PartitionLabel& l : shapes_with_k(config.n, k, config))
      so.classes.push_back(std::move(l));
  }
  std::sort(so.classes.begin(), so.classes.end(), label_less);
  return so;
}

EquilibriumReport analyze(const GameConfig& config, bool use_symmetry) {
  EquilibriumReport report = enumerate_nash(config, use_symmetry);
  const SocialOptimum so = social_optimum(config);
  report.so_value = so.value;
  report.so_partition_classes = so.classes;
  report.poa = so.value / report.worst_ne_sum;
  return report;
}

double price_of_anarchy(const GameConfig& config, bool use_symmetry) {
  return analyze(config, use_symmetry).poa;
}

bool verify_no_multiple_partition_ne(const GameConfig& config) {
  return !enumerate_nash(config).multiple_partition_ne;
}

bool verify_weak_partitions_not_ne(const GameConfig& config) {
  const EquilibriumReport report = enumerate_nash(config);
  for (const StrategyProfile& p : report.ne_profiles) {
    const FormedPartitions fp = formed_partitions(p);
    if (fp.unique && is_weak_exact(fp.partitions.front(), config)) return false;
  }
  return true;
}

MultiplePartitionCensus census_multiple_partitions(const GameConfig& config) {
  config.validate();
  const int n = config.n;
  if (n > kMaxUnreducedPlayers + 1)
    throw BudgetExceeded("census supports n <= " +
                         std::to_string(kMaxUnreducedPlayers + 1));
  const NashScanner scanner(config);
  MultiplePartitionCensus census;
  census.profiles = full_profile_count(n);
  for (std::size_t i = 0; i < census.profiles; ++i) {
    const Rows rows = full_profile(i, n);
    if (!scanner.catalog().multiple[scanner.catalog().graph_code(rows)]) continue;
    ++census.multiple;
    if (scanner.is_nash(rows)) ++census.multiple_equilibria;
  }
  return census;
}

}  // namespace coalition
