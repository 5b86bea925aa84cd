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

// coalition_forge: analyze the coalition-formation game from the command
// line.
//
// Exit codes: 0 success, 1 failed check or I/O error, 2 invalid arguments,
// 3 search budget exceeded.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coalition/equilibrium.hpp"
#include "coalition/game.hpp"
#include "coalition/parallel.hpp"
#include "coalition/regimes.hpp"
#include "coalition/report.hpp"
#include "coalition/resource_game.hpp"
#include "coalition/verification.hpp"

namespace {

using namespace coalition;

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GameOptions {
  int n = 2;
  std::optional<double> eta;
  bool no_adamant = false;
  bool symmetry = true;
  std::string format = "json";
  std::string out;
  std::optional<unsigned long> seed;  // accepted, unused: every path is deterministic
};

GameConfig make_config(int n, std::optional<double> eta, bool no_adamant) {
  if (n < 1 || n > kMaxPlayers)
    throw UsageError("--n must be in 1.." + std::to_string(kMaxPlayers));
  if (no_adamant) {
    if (eta && *eta != 0.0) throw UsageError("--eta must be 0 (or omitted) with --no-adamant");
    return GameConfig::without_adamant(n);
  }
  const double e = eta.value_or(1.0);
  if (!(e > 0) || !std::isfinite(e))
    throw UsageError("--eta must be positive (use --no-adamant for the game without one)");
  return GameConfig::with_adamant(n, e);
}

// Writes to --out when given, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open " + path);
  f << text;
  if (!f) throw std::ios_base::failure("cannot write " + path);
}

std::string render(const std::vector<ReportRecord>& records, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    os << csv_header() << "\n";
    for (const ReportRecord& r : records) os << to_csv_row(r) << "\n";
  } else if (format == "json") {
    for (const ReportRecord& r : records) os << to_json(r) << "\n";
  } else {
    for (const ReportRecord& r : records) os << to_text(r);
  }
  return os.str();
}

ReportRecord timed_analysis(const GameConfig& config, bool symmetry) {
  const auto start = std::chrono::steady_clock::now();
  const EquilibriumReport report = analyze(config, symmetry);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return make_record(report, ms);
}

int cmd_analyze(const GameOptions& o) {
  const GameConfig config = make_config(o.n, o.eta, o.no_adamant);
  emit(o.out, render({timed_analysis(config, o.symmetry)}, o.format));
  return 0;
}

int cmd_tables(const std::string& which, double tolerance, int large_n) {
  if (!(tolerance > 0)) throw UsageError("--tolerance must be positive");
  std::vector<std::string> selectors =
      which == "all" ? table_selectors() : std::vector<std::string>{which};
  bool all_passed = true;
  for (const std::string& s : selectors) {
    const TableCheck check = check_table(reference_table(s, large_n), tolerance);
    std::cout << format_table_check(check);
    all_passed = all_passed && check.passed;
  }
  return all_passed ? 0 : kExitFailed;
}

struct SweepOptions {
  int n = 2;
  double eta_min = 0.01;
  double eta_max = 3.0;
  int steps = 100;
  bool log = false;
  bool symmetry = true;
  std::string format = "csv";
  std::string out;
  std::optional<unsigned long> seed;
};

int cmd_sweep(const SweepOptions& o) {
  if (o.steps < 2) throw UsageError("--steps must be at least 2");
  if (!(o.eta_min >= 0) || !(o.eta_max >= o.eta_min))
    throw UsageError("need 0 <= --eta-min <= --eta-max");
  if (o.log && !(o.eta_min > 0)) throw UsageError("--log needs --eta-min > 0");
  if (o.n < 1 || o.n > kMaxPlayers)
    throw UsageError("--n must be in 1.." + std::to_string(kMaxPlayers));

  std::vector<double> etas(o.steps);
  for (int i = 0; i < o.steps; ++i) {
    const double t = static_cast<double>(i) / (o.steps - 1);
    etas[i] = o.log ? std::exp(std::log(o.eta_min) + t * (std::log(o.eta_max) - std::log(o.eta_min)))
                    : o.eta_min + t * (o.eta_max - o.eta_min);
  }
  etas.back() = o.eta_max;
  // Fail fast on budget before spawning workers.
  if (o.n > kMaxSearchPlayers || (!o.symmetry && o.n > kMaxUnreducedPlayers))
    throw BudgetExceeded("n=" + std::to_string(o.n) + " is beyond the search budget");

  std::vector<ReportRecord> records(etas.size());
  parallel_for(etas.size(), [&](int, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      // eta = 0 is the game without an adamant player.
      const GameConfig c = etas[i] == 0.0 ? GameConfig::without_adamant(o.n)
                                          : GameConfig::with_adamant(o.n, etas[i]);
      records[i] = timed_analysis(c, o.symmetry);
    }
  });
  emit(o.out, render(records, o.format));
  return 0;
}

int cmd_oracle(int k, double eta, double gamma, double lambda, double tol, bool no_adamant) {
  if (k < 1 || k > kMaxPlayers) throw UsageError("--k must be in 1.." + std::to_string(kMaxPlayers));
  if (!(tol > 0)) throw UsageError("--tolerance must be positive");
  if (!(gamma > 0) || !(lambda > 0)) throw UsageError("--gamma and --lambda must be positive");
  if (!no_adamant && !(eta > 0)) throw UsageError("--eta must be positive");
  const GameConfig config = no_adamant ? GameConfig::without_adamant(k, lambda, gamma)
                                       : GameConfig::with_adamant(k, eta, lambda, gamma);
  const PartitionOutcome exact = closed_form_outcome(k, config);
  PartitionOutcome numeric;
  try {
    numeric = numeric_rsg_ne(k, config, tol);
  } catch (const NonConvergence& e) {
    std::cout << "oracle did not converge: " << e.what() << "\n";
    return kExitFailed;
  }
  const double dev = max_deviation(exact, numeric);
  std::printf("k = %d, eta = %.10g, lambda = %.10g, gamma = %.10g, adamant %s\n", k,
              config.eta, lambda, gamma,
              !config.adamant_present ? "absent" : exact.significant ? "significant" : "insignificant");
  std::printf("%-28s %22s %22s\n", "", "closed form", "numeric");
  std::printf("%-28s %22.15g %22.15g\n", "coalition utility", exact.coalition_utility[0],
              numeric.coalition_utility[0]);
  std::printf("%-28s %22.15g %22.15g\n", "coalition aggregate action", exact.coalition_action[0],
              numeric.coalition_action[0]);
  if (config.adamant_present) {
    std::printf("%-28s %22.15g %22.15g\n", "adamant utility", exact.adamant_utility,
                numeric.adamant_utility);
    std::printf("%-28s %22.15g %22.15g\n", "adamant action", exact.adamant_action,
                numeric.adamant_action);
  }
  const bool ok = dev < tol;
  std::printf("max deviation %.3g (tolerance %.3g): %s\n", dev, tol, ok ? "PASS" : "FAIL");
  return ok ? 0 : kExitFailed;
}

int cmd_verify(int max_n) {
  if (max_n < 1 || max_n > kMaxSearchPlayers)
    throw UsageError("--max-n must be in 1.." + std::to_string(kMaxSearchPlayers));
  VerifyOptions opt;
  opt.max_n = max_n;
  bool ok = true;
  for (const CheckResult& r : run_property_suite(opt)) {
    std::printf("%s  %-60s %s (%.0f ms)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str(), r.runtime_ms);
    ok = ok && r.passed;
  }
  return ok ? 0 : kExitFailed;
}

void add_game_flags(CLI::App* cmd, GameOptions& o) {
  cmd->add_option("--n", o.n, "number of cooperating players")->required();
  cmd->add_option("--eta", o.eta, "adamant strength lambda0/lambda (> 0)");
  cmd->add_flag("--no-adamant", o.no_adamant, "game without the adamant player");
  cmd->add_flag("--symmetry,!--no-symmetry", o.symmetry,
                "enumerate one profile per relabeling orbit (default on)");
  cmd->add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out, "write output to this file");
  cmd->add_option("--seed", o.seed, "accepted for interface stability; unused");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coalition formation with proportional resource sharing and an adamant player"};
  app.require_subcommand(1);

  GameOptions analyze_opts;
  CLI::App* analyze = app.add_subcommand("analyze", "equilibria, social optimum and PoA");
  add_game_flags(analyze, analyze_opts);

  std::string which = "all";
  double table_tol = 1e-6;
  int large_n = 5;
  CLI::App* tables = app.add_subcommand("tables", "check the published regime tables");
  tables->add_option("--which", which, "n2, n3, n4, large, noadamant or all")
      ->check(CLI::IsMember({"n2", "n3", "n4", "large", "noadamant", "all"}));
  tables->add_option("--tolerance", table_tol, "distance from row edges at which to sample");
  tables->add_option("--n", large_n, "n for the large table (5 or 6)");

  SweepOptions sweep_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "analyze a range of eta values");
  sweep->add_option("--n", sweep_opts.n, "number of cooperating players")->required();
  sweep->add_option("--eta-min", sweep_opts.eta_min, "first eta (0 means no adamant player)");
  sweep->add_option("--eta-max", sweep_opts.eta_max, "last eta");
  sweep->add_option("--steps", sweep_opts.steps, "number of samples (>= 2)");
  sweep->add_flag("--log", sweep_opts.log, "log-spaced samples");
  sweep->add_flag("--symmetry,!--no-symmetry", sweep_opts.symmetry, "orbit reduction");
  sweep->add_option("--format", sweep_opts.format, "csv, json or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sweep->add_option("--out", sweep_opts.out, "write output to this file");
  sweep->add_option("--seed", sweep_opts.seed, "accepted for interface stability; unused");

  int k = 1;
  double oracle_eta = 1.0, gamma = 1.0, lambda = 1.0, oracle_tol = 1e-8;
  bool oracle_no_adamant = false;
  CLI::App* oracle = app.add_subcommand("oracle", "closed form against best-response iteration");
  oracle->add_option("--k", k, "number of C-coalitions")->required();
  oracle->add_option("--eta", oracle_eta, "adamant strength");
  oracle->add_option("--gamma", gamma, "cost factor");
  oracle->add_option("--lambda", lambda, "influence factor of the C-players");
  oracle->add_option("--tolerance,--tol", oracle_tol, "allowed deviation");
  oracle->add_flag("--no-adamant", oracle_no_adamant, "game without the adamant player");

  int max_n = 6;
  CLI::App* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--max-n", max_n, "largest n for equilibrium-level checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_opts);
    if (*tables) return cmd_tables(which, table_tol, large_n);
    if (*sweep) return cmd_sweep(sweep_opts);
    if (*oracle) return cmd_oracle(k, oracle_eta, gamma, lambda, oracle_tol, oracle_no_adamant);
    if (*verify) return cmd_verify(max_n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
