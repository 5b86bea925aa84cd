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

#ifndef COALITION_REGIMES_HPP
#define COALITION_REGIMES_HPP

// Published regime tables (equilibrium partitions, social optimum and price
// of anarchy per eta range) and the machinery that checks them against
// exhaustive computation.
//
// Each row carries both the range as printed and the exact range implied by
// the best-response crossings. Rows are sampled on the exact range; the
// printed constants are compared against boundaries recovered by scanning.

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "coalition/game.hpp"

namespace coalition {

inline constexpr double kOpenEnded = std::numeric_limits<double>::infinity();

// Exact crossings that appear in the tables.
namespace threshold {
double sqrt2_minus_1();          // GC against P2 (insignificant) in SO
double inv_sqrt2();              // GC against P2 (significant) in SO
double p2_equilibrium_upper();   // (3 - sqrt2) / (2 sqrt2)
double gc_equilibrium_low_n3();  // (2 - sqrt3) / sqrt3
double one_plus_sqrt2();
double one_plus_sqrt3();
}  // namespace threshold

struct RowSpec {
  int index = 0;
  int n = 0;
  std::string printed_range;
  // Exact range; an open end is excluded from sampling, a closed one is not
  // sampled exactly either (edges are approached within the tolerance).
  double lo = 0.0;
  double hi = kOpenEnded;
  std::vector<std::string> ne;  // display labels, ordered by k
  int so_k = 1;
  bool so_significant = true;
  std::string poa_text;
  std::function<double(int n, double eta)> poa;
};

struct PrintedConstant {
  std::string text;
  double printed = 0.0;
  double exact = 0.0;  // closed form of the crossing the constant stands for
};

// An eta band not covered by any printed row.
struct UnlistedBand {
  double lo = 0.0;
  double hi = 0.0;
  std::string description;
};

struct TableSpec {
  std::string selector;
  std::string title;
  bool adamant = true;
  int n = 0;  // 0 when rows differ in n
  std::vector<RowSpec> rows;
  std::vector<PrintedConstant> constants;
  std::vector<UnlistedBand> unlisted;
};

// Selectors: n2, n3, n4, large, noadamant. large_n picks n for "large"
// (5 or 6). Throws std::invalid_argument for unknown selectors.
TableSpec reference_table(const std::string& selector, int large_n = 5);
std::vector<std::string> table_selectors();

struct SampleCheck {
  double eta = 0.0;
  std::vector<std::string> ne;
  std::vector<std::string> so;
  double poa = 0.0;
  double expected_poa = 0.0;
  bool passed = false;
  std::string mismatch;
};

struct RowCheck {
  RowSpec spec;
  std::vector<SampleCheck> samples;
  bool passed = false;
};

struct RecoveredBoundary {
  double eta = 0.0;
  std::string below;  // regime signature just below
  std::string above;
};

enum class ConstantStatus { kMatched, kFlagged, kMissing };

struct ConstantCheck {
  PrintedConstant constant;
  double recovered = 0.0;  // nearest recovered boundary
  ConstantStatus status = ConstantStatus::kMissing;
  bool exact_confirmed = false;  // a recovered boundary within kExactCrossingTolerance
};

struct UnlistedCheck {
  UnlistedBand band;
  double eta = 0.0;
  std::vector<std::string> ne;
  std::vector<std::string> so;
  double poa = 0.0;
};

struct TableCheck {
  TableSpec spec;
  double tolerance = 0.0;
  std::vector<RowCheck> rows;
  std::vector<RecoveredBoundary> boundaries;
  std::vector<ConstantCheck> constants;
  std::vector<double> unprinted;  // recovered boundaries no constant claims
  std::vector<UnlistedCheck> unlisted;
  bool rows_passed = false;
  // Rows pass, and every printed constant is either matched or flagged
  // with its exact crossing confirmed.
  bool passed = false;
};

// Absolute distance within which a printed constant matches a recovered
// boundary.
inline constexpr double kPrintedConstantTolerance = 5e-3;
// Boundaries are bisected to 1e-10, but utility ties are decided at
// kUtilityTolerance, which moves a crossing by up to ~1e-9 where the
// competing utilities are nearly parallel in eta.
inline constexpr double kExactCrossingTolerance = 1e-8;

// Regime signature at eta: equilibrium labels and social-optimum classes.
std::string regime_signature(int n, double eta);

// Scans eta over [lo, hi] with the given step and bisects every signature
// change down to 1e-10.
std::vector<RecoveredBoundary> recover_boundaries(int n, double lo = 0.005,
                                                  double hi = 4.0,
                                                  double step = 0.005);

// tolerance is the distance from each row edge at which edges are sampled.
TableCheck check_table(const TableSpec& spec, double tolerance = 1e-6);

std::string format_table_check(const TableCheck& check);

}  // namespace coalition

#endif  // COALITION_REGIMES_HPP
