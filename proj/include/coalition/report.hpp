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

#ifndef COALITION_REPORT_HPP
#define COALITION_REPORT_HPP

// Flat result records and their JSON, CSV and text renderings.
//
// JSON and CSV carry no timing so identical inputs give identical bytes;
// runtime_ms only appears in text output.

#include <string>
#include <vector>

#include "coalition/equilibrium.hpp"

namespace coalition {

struct ReportRecord {
  int n = 0;
  double eta = 0.0;
  bool adamant = true;
  std::vector<std::string> ne_partitions;
  std::vector<std::string> so_partitions;
  double so_value = 0.0;
  double worst_ne_sum = 0.0;
  double poa = 0.0;
  bool multiple_partition_ne = false;
  double runtime_ms = 0.0;

  // Ignores runtime_ms.
  friend bool operator==(const ReportRecord& a, const ReportRecord& b);
};

ReportRecord make_record(const EquilibriumReport& report, double runtime_ms = 0.0);

// One JSON object on a single line.
std::string to_json(const ReportRecord& record);
// Throws std::invalid_argument on malformed input or missing fields.
ReportRecord record_from_json(const std::string& text);

// n,eta,adamant,ne_partitions,so_partitions,so_value,worst_ne_sum,poa,multiple_partition_ne
std::string csv_header();
// Reals use %.17g; label lists are joined by ';'.
std::string to_csv_row(const ReportRecord& record);

std::string to_text(const ReportRecord& record);

}  // namespace coalition

#endif  // COALITION_REPORT_HPP
