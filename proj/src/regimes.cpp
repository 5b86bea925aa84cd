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

#include "coalition/regimes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>

#include "coalition/equilibrium.hpp"

namespace coalition {

namespace threshold {
double sqrt2_minus_1() { return std::sqrt(2.0) - 1.0; }
double inv_sqrt2() { return 1.0 / std::sqrt(2.0); }
double p2_equilibrium_upper() { return (3.0 - std::sqrt(2.0)) / (2.0 * std::sqrt(2.0)); }
double gc_equilibrium_low_n3() { return (2.0 - std::sqrt(3.0)) / std::sqrt(3.0); }
double one_plus_sqrt2() { return 1.0 + std::sqrt(2.0); }
double one_plus_sqrt3() { return 1.0 + std::sqrt(3.0); }
}  // namespace threshold

namespace {

using threshold::gc_equilibrium_low_n3;
using threshold::inv_sqrt2;
using threshold::one_plus_sqrt2;
using threshold::one_plus_sqrt3;
using threshold::p2_equilibrium_upper;
using threshold::sqrt2_minus_1;

double sq(double x) { return x * x; }

RowSpec row(int index, int n, std::string printed, double lo, double hi,
            std::vector<std::string> ne, int so_k, bool so_significant,
            std::string poa_text, std::function<double(int, double)> poa) {
  RowSpec r;
  r.index = index;
  r.n = n;
  r.printed_range = std::move(printed);
  r.lo = lo;
  r.hi = hi;
  r.ne = std::move(ne);
  r.so_k = so_k;
  r.so_significant = so_significant;
  r.poa_text = std::move(poa_text);
  r.poa = std::move(poa);
  return r;
}

// PoA shapes shared by several tables.
auto gc_over_alc = [](int n, double e) { return sq((1 + n * e) / (1 + e)) / n; };
auto gc_over_insignificant = [](int n, double e) { return n / sq(1 + e); };
auto p2_over_insignificant = [](int n, double e) { return 2.0 * n / sq(1 + 2 * e); };

TableSpec table_n2() {
  TableSpec t;
  t.selector = "n2";
  t.title = "n = 2";
  t.n = 2;
  const double c707 = inv_sqrt2(), c414 = sqrt2_minus_1();
  t.rows = {
      row(1, 2, "eta >= 0.707", c707, kOpenEnded, {"GC", "ALC"}, 1, true,
          "(1/2)((1+2eta)/(1+eta))^2", gc_over_alc),
      row(2, 2, "0.5 < eta <= 0.707", 0.5, c707, {"ALC"}, 2, true, "1",
          [](int, double) { return 1.0; }),
      row(3, 2, "0.414 <= eta <= 0.5", c414, 0.5, {"ALC°"}, 2, false, "1",
          [](int, double) { return 1.0; }),
      row(4, 2, "0 < eta <= 0.414", 0.0, c414, {"GC", "ALC°"}, 1, true,
          "2/(1+eta)^2", gc_over_insignificant),
  };
  t.constants = {{"0.707", 0.707, c707}, {"0.5", 0.5, 0.5}, {"0.414", 0.414, c414}};
  return t;
}

TableSpec table_n3() {
  TableSpec t;
  t.selector = "n3";
  t.title = "n = 3";
  t.n = 3;
  const double c707 = inv_sqrt2(), c414 = sqrt2_minus_1(), c57 = p2_equilibrium_upper(),
               c15 = gc_equilibrium_low_n3(), c2414 = one_plus_sqrt2(),
               c2732 = one_plus_sqrt3();
  auto p2_over_alc = [](int, double e) { return (2.0 / 3.0) * sq((1 + 3 * e) / (1 + 2 * e)); };
  t.rows = {
      row(1, 3, "eta >= 2.732", c2732, kOpenEnded, {"GC", "P2", "ALC"}, 1, true,
          "(1/3)((1+3eta)/(1+eta))^2", gc_over_alc),
      row(2, 3, "2.414 <= eta <= 2.732", c2414, c2732, {"P2", "ALC"}, 1, true,
          "(1/3)((1+3eta)/(1+eta))^2", gc_over_alc),
      row(3, 3, "0.707 <= eta <= 2.414", c707, c2414, {"ALC"}, 1, true,
          "(1/3)((1+3eta)/(1+eta))^2", gc_over_alc),
      // ALC is only significant above 2/3 at n = 3.
      row(4, 3, "0.57 <= eta <= 0.707", 2.0 / 3.0, c707, {"ALC"}, 2, true,
          "(2/3)((1+3eta)/(1+2eta))^2", p2_over_alc),
      row(5, 3, "0.5 < eta <= 0.57", 0.5, c57, {"P2", "ALC°"}, 2, true,
          "6/(1+2eta)^2", p2_over_insignificant),
      row(6, 3, "0.414 <= eta <= 0.5", c414, 0.5, {"P2°", "ALC°"}, 2, false, "3/2",
          [](int, double) { return 1.5; }),
      row(7, 3, "0.15 <= eta <= 0.414", c15, c414, {"P2°", "ALC°"}, 1, true,
          "3/(1+eta)^2", gc_over_insignificant),
      row(8, 3, "0 < eta <= 0.15", 0.0, c15, {"GC", "P2°", "ALC°"}, 1, true,
          "3/(1+eta)^2", gc_over_insignificant),
  };
  t.constants = {{"2.732", 2.732, c2732}, {"2.414", 2.414, c2414}, {"0.707", 0.707, c707},
                 {"0.57", 0.57, c57},     {"0.5", 0.5, 0.5},         {"0.414", 0.414, c414},
                 {"0.15", 0.15, c15}};
  t.unlisted = {{c57, 2.0 / 3.0,
                 "between the P2 equilibrium upper edge and ALC significance"}};
  return t;
}

TableSpec table_n4() {
  TableSpec t;
  t.selector = "n4";
  t.title = "n = 4";
  t.n = 4;
  const double c707 = inv_sqrt2(), c414 = sqrt2_minus_1(), c57 = p2_equilibrium_upper(),
               c2414 = one_plus_sqrt2();
  t.rows = {
      row(1, 4, "eta >= 2.414", c2414, kOpenEnded, {"TTC", "ALC"}, 1, true,
          "(1/4)((1+4eta)/(1+eta))^2", gc_over_alc),
      row(2, 4, "0.75 <= eta <= 2.414", 0.75, c2414, {"ALC"}, 1, true,
          "(1/4)((1+4eta)/(1+eta))^2", gc_over_alc),
      row(3, 4, "0.707 <= eta <= 0.75", c707, 0.75, {"ALC°"}, 1, true, "4/(1+eta)^2",
          gc_over_insignificant),
      row(4, 4, "0.57 <= eta <= 0.707", c57, c707, {"ALC°"}, 2, true, "8/(1+2eta)^2",
          p2_over_insignificant),
      row(5, 4, "0.5 < eta <= 0.57", 0.5, c57, {"TTC", "ALC°"}, 2, true, "8/(1+2eta)^2",
          p2_over_insignificant),
      row(6, 4, "0.414 <= eta <= 0.5", c414, 0.5, {"TTC°", "ALC°"}, 2, false, "2",
          [](int, double) { return 2.0; }),
      row(7, 4, "0 < eta <= 0.414", 0.0, c414, {"TTC°", "ALC°"}, 1, true, "4/(1+eta)^2",
          gc_over_insignificant),
  };
  t.constants = {{"2.414", 2.414, c2414}, {"0.75", 0.75, 0.75}, {"0.707", 0.707, c707},
                 {"0.57", 0.57, c57},     {"0.5", 0.5, 0.5},    {"0.414", 0.414, c414}};
  return t;
}

TableSpec table_large(int n) {
  if (n < 5 || n > kMaxSearchPlayers)
    throw std::invalid_argument("the large-n table needs 5 <= n <= " +
                                std::to_string(kMaxSearchPlayers));
  TableSpec t;
  t.selector = "large";
  t.title = "n = " + std::to_string(n) + " (n > 4)";
  t.n = n;
  const double c707 = inv_sqrt2(), c414 = sqrt2_minus_1(),
               edge = static_cast<double>(n - 1) / n;
  t.rows = {
      row(1, n, "eta > (n-1)/n", edge, kOpenEnded, {"ALC"}, 1, true,
          "(1/n)((1+n eta)/(1+eta))^2", gc_over_alc),
      row(2, n, "0.707 <= eta <= (n-1)/n", c707, edge, {"ALC°"}, 1, true,
          "n/(1+eta)^2", gc_over_insignificant),
      row(3, n, "0.5 < eta <= 0.707", 0.5, c707, {"ALC°"}, 2, true, "2n/(1+2eta)^2",
          p2_over_insignificant),
      row(4, n, "0.414 <= eta <= 0.5", c414, 0.5, {"ALC°"}, 2, false, "n/2",
          [](int m, double) { return m / 2.0; }),
      row(5, n, "0 < eta <= 0.414", 0.0, c414, {"ALC°"}, 1, true, "n/(1+eta)^2",
          gc_over_insignificant),
  };
  t.constants = {{"(n-1)/n", edge, edge}, {"0.707", 0.707, c707}, {"0.5", 0.5, 0.5},
                 {"0.414", 0.414, c414}};
  return t;
}

TableSpec table_noadamant() {
  TableSpec t;
  t.selector = "noadamant";
  t.title = "no adamant player";
  t.adamant = false;
  auto poa_n = [](int n, double) { return static_cast<double>(n); };
  t.rows = {
      row(1, 2, "n = 2", 0, 0, {"GC°", "ALC°"}, 1, false, "2", poa_n),
      row(2, 3, "n = 3", 0, 0, {"GC°", "P2°", "ALC°"}, 1, false, "3", poa_n),
      row(3, 4, "n = 4", 0, 0, {"GC°", "TTC°", "ALC°"}, 1, false, "4", poa_n),
      row(4, 5, "n > 4 (n = 5)", 0, 0, {"ALC°"}, 1, false, "n", poa_n),
  };
  return t;
}

std::vector<double> sample_points(const RowSpec& r, double tol) {
  if (r.hi == kOpenEnded) return {r.lo + tol, r.lo + 1.0, r.lo + 10.0};
  const double lo = r.lo == 0.0 ? tol : r.lo + tol;
  return {lo, 0.5 * (r.lo + r.hi), r.hi - tol};
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::string fmt(double x, int digits = 6) {
  if (x == kOpenEnded) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

SampleCheck check_sample(const RowSpec& r, const GameConfig& config) {
  SampleCheck s;
  s.eta = config.eta;
  const EquilibriumReport rep = analyze(config);
  s.ne = rep.ne_labels();
  s.so = rep.so_labels();
  s.poa = rep.poa;
  s.expected_poa = r.poa(r.n, config.eta);

  std::vector<std::string> want = r.ne, got = s.ne;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  std::vector<std::string> problems;
  if (want != got) problems.push_back("NE {" + join(s.ne) + "} != {" + join(r.ne) + "}");

  std::set<std::pair<int, bool>> so_classes;
  for (const PartitionLabel& l : rep.so_partition_classes)
    so_classes.insert({l.k, l.significant});
  if (so_classes != std::set<std::pair<int, bool>>{{r.so_k, r.so_significant}})
    problems.push_back("SO {" + join(s.so) + "} is not the k=" + std::to_string(r.so_k) +
                       (r.so_significant ? "" : " insignificant") + " class");
  if (!(std::abs(s.poa - s.expected_poa) <= 1e-9))
    problems.push_back("PoA " + fmt(s.poa, 12) + " != " + fmt(s.expected_poa, 12));
  s.passed = problems.empty();
  s.mismatch = join(problems, "; ");
  return s;
}

}  // namespace

TableSpec reference_table(const std::string& selector, int large_n) {
  if (selector == "n2") return table_n2();
  if (selector == "n3") return table_n3();
  if (selector == "n4") return table_n4();
  if (selector == "large") return table_large(large_n);
  if (selector == "noadamant") return table_noadamant();
  throw std::invalid_argument("unknown table '" + selector + "'");
}

std::vector<std::string> table_selectors() {
  return {"n2", "n3", "n4", "large", "noadamant"};
}

std::string regime_signature(int n, double eta) {
  const EquilibriumReport rep = analyze(GameConfig::with_adamant(n, eta));
  return "NE {" + join(rep.ne_labels()) + "} SO {" + join(rep.so_labels()) + "}";
}

std::vector<RecoveredBoundary> recover_boundaries(int n, double lo, double hi,
                                                  double step) {
  std::vector<RecoveredBoundary> out;
  double prev_eta = lo;
  std::string prev = regime_signature(n, lo);
  const int steps = static_cast<int>(std::llround((hi - lo) / step));
  for (int i = 1; i <= steps; ++i) {
    const double eta = lo + i * step;
    std::string cur = regime_signature(n, eta);
    if (cur != prev) {
      double a = prev_eta, b = eta;
      while (b - a > 1e-10) {
        const double mid = 0.5 * (a + b);
        if (regime_signature(n, mid) == prev)
          a = mid;
        else
          b = mid;
      }
      out.push_back({0.5 * (a + b), prev, cur});
    }
    prev = std::move(cur);
    prev_eta = eta;
  }
  return out;
}

TableCheck check_table(const TableSpec& spec, double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  TableCheck check;
  check.spec = spec;
  check.tolerance = tolerance;
  check.rows_passed = true;
  for (const RowSpec& r : spec.rows) {
    RowCheck rc;
    rc.spec = r;
    rc.passed = true;
    if (!spec.adamant) {
      rc.samples.push_back(check_sample(r, GameConfig::without_adamant(r.n)));
    } else {
      for (double eta : sample_points(r, tolerance))
        rc.samples.push_back(check_sample(r, GameConfig::with_adamant(r.n, eta)));
    }
    for (const SampleCheck& s : rc.samples) rc.passed = rc.passed && s.passed;
    check.rows_passed = check.rows_passed && rc.passed;
    check.rows.push_back(std::move(rc));
  }
  check.passed = check.rows_passed;
  if (!spec.adamant) return check;

  // A coarser scan keeps the largest tables affordable; their boundaries
  // are far apart.
  const double step = spec.n >= 6 ? 0.05 : 0.005;
  check.boundaries = recover_boundaries(spec.n, step, 4.0, step);
  auto nearest = [&](double x) {
    double best = kOpenEnded;
    for (const RecoveredBoundary& b : check.boundaries)
      if (std::abs(b.eta - x) < std::abs(best - x)) best = b.eta;
    return best;
  };
  for (const PrintedConstant& c : spec.constants) {
    ConstantCheck cc;
    cc.constant = c;
    if (!check.boundaries.empty()) {
      cc.recovered = nearest(c.printed);
      cc.status = std::abs(cc.recovered - c.printed) <= kPrintedConstantTolerance
                      ? ConstantStatus::kMatched
                      : ConstantStatus::kFlagged;
      cc.exact_confirmed = std::abs(nearest(c.exact) - c.exact) <= kExactCrossingTolerance;
    }
    const bool ok = cc.status == ConstantStatus::kMatched ||
                    (cc.status == ConstantStatus::kFlagged && cc.exact_confirmed);
    check.passed = check.passed && ok;
    check.constants.push_back(cc);
  }
  for (const RecoveredBoundary& b : check.boundaries) {
    bool claimed = false;
    for (const ConstantCheck& cc : check.constants)
      claimed = claimed || std::abs(b.eta - cc.constant.exact) <= kExactCrossingTolerance ||
                std::abs(b.eta - cc.constant.printed) <= kPrintedConstantTolerance;
    if (!claimed) check.unprinted.push_back(b.eta);
  }
  for (const UnlistedBand& band : spec.unlisted) {
    UnlistedCheck uc;
    uc.band = band;
    uc.eta = 0.5 * (band.lo + band.hi);
    const EquilibriumReport rep = analyze(GameConfig::with_adamant(spec.n, uc.eta));
    uc.ne = rep.ne_labels();
    uc.so = rep.so_labels();
    uc.poa = rep.poa;
    check.unlisted.push_back(std::move(uc));
  }
  return check;
}

std::string format_table_check(const TableCheck& check) {
  std::ostringstream os;
  const TableSpec& spec = check.spec;
  os << "table " << spec.selector << ": " << spec.title << "\n";
  int passed = 0;
  for (const RowCheck& rc : check.rows) {
    const RowSpec& r = rc.spec;
    passed += rc.passed;
    os << "  row " << r.index << "  " << r.printed_range;
    if (spec.adamant) {
      os << "  (sampled on " << fmt(r.lo, 8) << " .. " << fmt(r.hi, 8) << ")";
    }
    os << "  NE {" << join(r.ne) << "}  PoA " << r.poa_text << "  "
       << (rc.passed ? "PASS" : "FAIL") << "\n";
    for (const SampleCheck& s : rc.samples)
      if (!s.passed)
        os << "      eta=" << fmt(s.eta, 10) << ": " << s.mismatch << "\n";
  }
  os << "  rows: " << passed << "/" << check.rows.size() << " pass\n";
  if (!check.constants.empty()) {
    os << "  printed boundaries (match within " << fmt(kPrintedConstantTolerance)
       << "):\n";
    for (const ConstantCheck& cc : check.constants) {
      os << "    " << cc.constant.text << " -> recovered " << fmt(cc.recovered, 10)
         << "  exact " << fmt(cc.constant.exact, 10) << "  ";
      switch (cc.status) {
        case ConstantStatus::kMatched: os << "MATCH"; break;
        case ConstantStatus::kFlagged:
          os << "FLAGGED (printed value is " << fmt(std::abs(cc.recovered - cc.constant.printed), 3)
             << " from the crossing)";
          break;
        case ConstantStatus::kMissing: os << "MISSING"; break;
      }
      os << (cc.exact_confirmed ? "  exact crossing confirmed" : "  exact crossing NOT found")
         << "\n";
    }
  }
  for (double eta : check.unprinted)
    os << "  unprinted boundary at eta=" << fmt(eta, 10) << "\n";
  for (const UnlistedCheck& uc : check.unlisted)
    os << "  unlisted band " << fmt(uc.band.lo, 8) << " < eta <= " << fmt(uc.band.hi, 8)
       << " (" << uc.band.description << "): NE {" << join(uc.ne) << "}  SO {"
       << join(uc.so) << "}  PoA at eta=" << fmt(uc.eta, 8) << " is " << fmt(uc.poa, 10)
       << "\n";
  os << "  result: " << (check.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace coalition
