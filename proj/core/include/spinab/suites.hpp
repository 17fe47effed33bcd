// Copyright 2026 The spinab Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spinab {

enum class Suite { kAll, kAlgebra, kPotentials, kEigen, kInterference, kDirac };

const char* to_string(Suite s);
// Throws Error(kUsage) on an unknown name.
Suite parse_suite(const std::string& name);

struct SuiteConfig {
  std::uint64_t seed = 42;
  double tol_scale = 1.0;

  void validate() const;
};

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  // Acceptance criterion this check feeds (0 for supporting checks).
  int criterion = 0;
};

// Checks run in a fixed order and every random draw is keyed by the seed and
// the check's own name, so a suite produces the same numbers alone or inside
// "all".
std::vector<CheckResult> run_suite(Suite suite, const SuiteConfig& config = {});

// "name residual threshold PASS|FAIL" with fixed-width scientific numbers.
std::string format_check(const CheckResult& c);

}  // namespace spinab
