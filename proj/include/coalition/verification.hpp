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

#ifndef COALITION_VERIFICATION_HPP
#define COALITION_VERIFICATION_HPP

// Property suite run by `coalition_forge verify`.

#include <string>
#include <vector>

namespace coalition {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double runtime_ms = 0.0;
};

struct VerifyOptions {
  int max_n = 6;  // largest n used by the equilibrium-level checks
};

// Table boundary constants +/- 0.02, plus 1e-3, 0.1, 0.3, 1, 2, 5 and 1e3.
std::vector<double> verification_eta_grid();

std::vector<CheckResult> run_property_suite(const VerifyOptions& options = {});

}  // namespace coalition

#endif  // COALITION_VERIFICATION_HPP
