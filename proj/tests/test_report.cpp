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
#include "doctest.h"
#include "json.hpp"

using namespace coalition;

TEST_CASE("json round-trip") {
  for (int n = 1; n <= 4; ++n)
    for (double eta : {0.1, 1.0 / 3, 0.45, 2.0 / 3, 1.0, 3.0}) {
      const ReportRecord r = make_record(analyze(GameConfig::with_adamant(n, eta)), 12.5);
      const ReportRecord back = record_from_json(to_json(r));
      CHECK(back == r);
      CHECK(back.eta == r.eta);  // bit-exact
      CHECK(back.poa == r.poa);
    }
  const ReportRecord r = make_record(analyze(GameConfig::without_adamant(3)));
  CHECK(record_from_json(to_json(r)) == r);
}

TEST_CASE("json layout") {
  const ReportRecord r = make_record(analyze(GameConfig::with_adamant(2, 1.0)));
  const std::string text = to_json(r);
  CHECK(text.find('\n') == std::string::npos);
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j.at("ne_partitions") == nlohmann::json::array({"GC", "ALC"}));
  CHECK(j.at("poa").get<double>() == doctest::Approx(1.125).epsilon(1e-12));
  CHECK(j.at("multiple_partition_ne") == false);
  CHECK_FALSE(j.contains("runtime_ms"));
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(record_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(record_from_json("{\"n\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(record_from_json("[]"), std::invalid_argument);
}

TEST_CASE("csv is deterministic and quoted") {
  const ReportRecord r = make_record(analyze(GameConfig::with_adamant(3, 0.45)), 1.0);
  ReportRecord later = make_record(analyze(GameConfig::with_adamant(3, 0.45)), 99.0);
  CHECK(to_csv_row(r) == to_csv_row(later));
  CHECK(csv_header() ==
        "n,eta,adamant,ne_partitions,so_partitions,so_value,worst_ne_sum,poa,multiple_partition_ne");
  const std::string row = to_csv_row(r);
  CHECK(row.rfind("3,0.45000000000000001,true,P2°;ALC°,P2°,", 0) == 0);
  ReportRecord odd = r;
  odd.ne_partitions = {"a,b", "q\"x"};
  CHECK(to_csv_row(odd).find("\"a,b;q\"\"x\"") != std::string::npos);
}

TEST_CASE("text report") {
  const std::string text = to_text(make_record(analyze(GameConfig::with_adamant(2, 1.0))));
  CHECK(text.find("GC") != std::string::npos);
  CHECK(text.find("1.125") != std::string::npos);
}
