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

#include "coalition/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace coalition {
namespace {

std::string real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// RFC 4180: quote fields holding separators, quotes or line breaks.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

bool operator==(const ReportRecord& a, const ReportRecord& b) {
  return a.n == b.n && a.eta == b.eta && a.adamant == b.adamant &&
         a.ne_partitions == b.ne_partitions && a.so_partitions == b.so_partitions &&
         a.so_value == b.so_value && a.worst_ne_sum == b.worst_ne_sum && a.poa == b.poa &&
         a.multiple_partition_ne == b.multiple_partition_ne;
}

ReportRecord make_record(const EquilibriumReport& report, double runtime_ms) {
  ReportRecord r;
  r.n = report.config.n;
  r.eta = report.config.eta;
  r.adamant = report.config.adamant_present;
  r.ne_partitions = report.ne_labels();
  r.so_partitions = report.so_labels();
  r.so_value = report.so_value;
  r.worst_ne_sum = report.worst_ne_sum;
  r.poa = report.poa;
  r.multiple_partition_ne = report.multiple_partition_ne;
  r.runtime_ms = runtime_ms;
  return r;
}

std::string to_json(const ReportRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["eta"] = r.eta;
  j["adamant"] = r.adamant;
  j["ne_partitions"] = r.ne_partitions;
  j["so_partitions"] = r.so_partitions;
  j["so_value"] = r.so_value;
  j["worst_ne_sum"] = r.worst_ne_sum;
  j["poa"] = r.poa;
  j["multiple_partition_ne"] = r.multiple_partition_ne;
  return j.dump();
}

ReportRecord record_from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    ReportRecord r;
    r.n = j.at("n").get<int>();
    r.eta = j.at("eta").get<double>();
    r.adamant = j.at("adamant").get<bool>();
    r.ne_partitions = j.at("ne_partitions").get<std::vector<std::string>>();
    r.so_partitions = j.at("so_partitions").get<std::vector<std::string>>();
    r.so_value = j.at("so_value").get<double>();
    r.worst_ne_sum = j.at("worst_ne_sum").get<double>();
    r.poa = j.at("poa").get<double>();
    r.multiple_partition_ne = j.at("multiple_partition_ne").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad report record: ") + e.what());
  }
}

std::string csv_header() {
  return "n,eta,adamant,ne_partitions,so_partitions,so_value,worst_ne_sum,poa,"
         "multiple_partition_ne";
}

std::string to_csv_row(const ReportRecord& r) {
  std::string out;
  out += std::to_string(r.n) + ",";
  out += real(r.eta) + ",";
  out += std::string(r.adamant ? "true" : "false") + ",";
  out += csv_field(join(r.ne_partitions, ";")) + ",";
  out += csv_field(join(r.so_partitions, ";")) + ",";
  out += real(r.so_value) + ",";
  out += real(r.worst_ne_sum) + ",";
  out += real(r.poa) + ",";
  out += r.multiple_partition_ne ? "true" : "false";
  return out;
}

std::string to_text(const ReportRecord& r) {
  std::ostringstream os;
  os << "n = " << r.n;
  if (r.adamant)
    os << ", eta = " << r.eta << "\n";
  else
    os << ", no adamant player\n";
  os << "  NE partitions:        " << join(r.ne_partitions, ", ") << "\n";
  os << "  SO partitions:        " << join(r.so_partitions, ", ") << "\n";
  os << "  SO value:             " << real(r.so_value) << "\n";
  os << "  worst NE sum:         " << real(r.worst_ne_sum) << "\n";
  os << "  price of anarchy:     " << real(r.poa) << "\n";
  os << "  multi-partition NE:   " << (r.multiple_partition_ne ? "yes" : "no") << "\n";
  os << "  runtime:              " << r.runtime_ms << " ms\n";
  return os.str();
}

}  // namespace coalition
