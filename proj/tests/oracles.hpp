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

#ifndef COALITION_TESTS_ORACLES_HPP
#define COALITION_TESTS_ORACLES_HPP

// Slow reference implementations used only by tests. They share no code
// with the library: sets are std::set, partitions are built by insertion,
// formation follows the definitions literally (compare against every other
// admissible partition), and equilibria are checked over the full profile
// space.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Set = std::set<int>;
using Partition = std::vector<Set>;  // blocks sorted by smallest member
using Profile = std::vector<Set>;    // profile[i - 1] is player i's wish set

inline std::string str(const Set& s) {
  std::string out = "{";
  for (int p : s) out += (out.size() > 1 ? "," : "") + std::to_string(p);
  return out + "}";
}

inline std::string str(const Partition& p) {
  std::string out;
  for (const Set& s : p) out += (out.empty() ? "" : "|") + str(s);
  return out;
}

inline std::string profile_str(const Profile& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ";";
    std::string row;
    for (int p : x[i]) row += (row.empty() ? "" : ",") + std::to_string(p);
    out += row;
  }
  return out;
}

inline Partition normalize(Partition p) {
  std::sort(p.begin(), p.end(), [](const Set& a, const Set& b) { return *a.begin() < *b.begin(); });
  return p;
}

// Set partitions of {1..n}: each player joins an existing block or opens one.
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out{{}};
  for (int p = 1; p <= n; ++p) {
    std::vector<Partition> next;
    for (const Partition& part : out) {
      for (std::size_t b = 0; b < part.size(); ++b) {
        Partition q = part;
        q[b].insert(p);
        next.push_back(q);
      }
      Partition q = part;
      q.push_back({p});
      next.push_back(q);
    }
    out = std::move(next);
  }
  for (Partition& p : out) p = normalize(p);
  return out;
}

// All wish-set choices: each player picks any subset of the others.
inline std::vector<Profile> profiles(int n) {
  std::vector<Profile> out{{}};
  for (int p = 1; p <= n; ++p) {
    std::vector<int> others;
    for (int q = 1; q <= n; ++q)
      if (q != p) others.push_back(q);
    std::vector<Profile> next;
    for (const Profile& x : out)
      for (int mask = 0; mask < (1 << others.size()); ++mask) {
        Set s{p};
        for (std::size_t b = 0; b < others.size(); ++b)
          if (mask >> b & 1) s.insert(others[b]);
        Profile y = x;
        y.push_back(s);
        next.push_back(y);
      }
    out = std::move(next);
  }
  return out;
}

inline bool wants(const Profile& x, int i, int j) { return x[i - 1].count(j) > 0; }

// Every pair in every block wants each other.
inline bool respects(const Profile& x, const Partition& p) {
  for (const Set& s : p)
    for (int i : s)
      for (int j : s)
        if (i != j && !(wants(x, i, j) && wants(x, j, i))) return false;
  return true;
}

// a is a strict coarsening of b.
inline bool coarser(const Partition& a, const Partition& b) {
  if (a == b) return false;
  for (const Set& s : b) {
    bool inside = false;
    for (const Set& t : a)
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) inside = true;
    if (!inside) return false;
  }
  return true;
}

inline std::vector<Partition> formed(const Profile& x) {
  const int n = static_cast<int>(x.size());
  std::vector<Partition> admissible;
  for (const Partition& p : partitions(n))
    if (respects(x, p)) admissible.push_back(p);
  std::vector<Partition> out;
  for (const Partition& p : admissible) {
    bool minimal = true;
    for (const Partition& q : admissible)
      if (coarser(q, p)) minimal = false;
    if (minimal) out.push_back(p);
  }
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return str(a) < str(b); });
  return out;
}

// Equal share of the equilibrium coalition utility. The adamant player is
// significant iff eta > (k - 1)/k.
inline double share(const Partition& p, int player, double eta, bool adamant) {
  const double k = static_cast<double>(p.size());
  double size = 0;
  for (const Set& s : p)
    if (s.count(player)) size = static_cast<double>(s.size());
  const bool significant = adamant && eta > (k - 1) / k;
  if (significant) return 1.0 / (size * (1 + k * eta) * (1 + k * eta));
  return 1.0 / (k * k * size);
}

inline double coalition_total(const Partition& p, double eta, bool adamant) {
  double total = 0;
  for (const Set& s : p) total += share(p, *s.begin(), eta, adamant) * s.size();
  return total;
}

inline std::string label(const Partition& p, int n, double eta, bool adamant) {
  const int k = static_cast<int>(p.size());
  std::vector<int> sizes;
  for (const Set& s : p) sizes.push_back(static_cast<int>(s.size()));
  std::sort(sizes.begin(), sizes.end());
  std::string out;
  if (k == 1)
    out = "GC";
  else if (k == n)
    out = "ALC";
  else if (n == 4 && sizes == std::vector<int>{2, 2})
    out = "TTC";
  else
    out = "P" + std::to_string(k);
  const bool significant = adamant && eta > (k - 1.0) / k;
  return significant ? out : out + "°";
}

struct Game {
  int n;
  double eta;
  bool adamant;
  std::vector<Profile> space;
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<Partition>> formed_at;
  std::vector<std::vector<double>> utility;  // utility[profile][player - 1]

  Game(int n_, double eta_, bool adamant_) : n(n_), eta(eta_), adamant(adamant_) {
    space = profiles(n);
    for (std::size_t i = 0; i < space.size(); ++i) {
      index[profile_str(space[i])] = i;
      formed_at.push_back(formed(space[i]));
      std::vector<double> u(n, 1e300);
      for (const Partition& p : formed_at.back())
        for (int q = 1; q <= n; ++q) u[q - 1] = std::min(u[q - 1], share(p, q, eta, adamant));
      utility.push_back(u);
    }
  }

  bool is_nash(std::size_t i) const {
    for (int p = 1; p <= n; ++p) {
      std::vector<int> others;
      for (int q = 1; q <= n; ++q)
        if (q != p) others.push_back(q);
      for (int mask = 0; mask < (1 << others.size()); ++mask) {
        Profile y = space[i];
        y[p - 1] = {p};
        for (std::size_t b = 0; b < others.size(); ++b)
          if (mask >> b & 1) y[p - 1].insert(others[b]);
        const std::size_t j = index.at(profile_str(y));
        if (utility[j][p - 1] > utility[i][p - 1] + 1e-12) return false;
      }
    }
    return true;
  }

  struct Result {
    std::set<std::string> ne_labels;
    std::set<std::string> ne_profiles;  // all NE profiles, not reduced
    bool multiple = false;
    double worst = 1e300;
    double so = 0;
    double poa = 0;
  };

  Result solve() const {
    Result r;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (!is_nash(i)) continue;
      r.ne_profiles.insert(profile_str(space[i]));
      if (formed_at[i].size() > 1) r.multiple = true;
      for (const Partition& p : formed_at[i]) {
        r.ne_labels.insert(label(p, n, eta, adamant));
        r.worst = std::min(r.worst, coalition_total(p, eta, adamant));
      }
    }
    for (const Partition& p : partitions(n)) r.so = std::max(r.so, coalition_total(p, eta, adamant));
    r.poa = r.so / r.worst;
    return r;
  }
};

inline Profile relabel(const Profile& x, const std::vector<int>& perm) {
  Profile y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Set s;
    for (int q : x[i]) s.insert(perm[q - 1]);
    y[perm[i] - 1] = s;
  }
  return y;
}

// Number of relabeling orbits, by Burnside's lemma over explicit fixed
// points.
inline std::size_t orbit_count(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::size_t fixed = 0, group = 0;
  const std::vector<Profile> all = profiles(n);
  do {
    ++group;
    for (const Profile& x : all)
      if (relabel(x, perm) == x) ++fixed;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return fixed / group;
}

}  // namespace oracle

#endif  // COALITION_TESTS_ORACLES_HPP
