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

#include <set>

#include <gtest/gtest.h>

#include "spinab/errors.hpp"
#include "spinab/suites.hpp"

using namespace spinab;

namespace {

TEST(Suites, NamesRoundTrip) {
  for (Suite s : {Suite::kAll, Suite::kAlgebra, Suite::kPotentials, Suite::kEigen,
                  Suite::kInterference, Suite::kDirac}) {
    EXPECT_EQ(parse_suite(to_string(s)), s);
  }
  EXPECT_THROW(parse_suite("everything"), Error);
}

TEST(Suites, ConfigValidation) {
  SuiteConfig c;
  c.tol_scale = -1.0;
  EXPECT_THROW(c.validate(), Error);
  EXPECT_THROW(run_suite(Suite::kAlgebra, c), Error);
}

TEST(Suites, SubsetOfAllIsIdentical) {
  const auto all = run_suite(Suite::kAll);
  const auto eigen = run_suite(Suite::kEigen);
  std::set<std::string> names;
  for (const CheckResult& c : all) EXPECT_TRUE(names.insert(c.name).second) << c.name;
  std::size_t hits = 0;
  for (const CheckResult& e : eigen) {
    for (const CheckResult& a : all) {
      if (a.name != e.name) continue;
      EXPECT_EQ(format_check(a), format_check(e));
      ++hits;
    }
  }
  EXPECT_EQ(hits, eigen.size());
}

TEST(Suites, ToleranceScaleMultipliesThresholds) {
  SuiteConfig loose;
  loose.tol_scale = 10.0;
  const auto base = run_suite(Suite::kAlgebra);
  const auto scaled = run_suite(Suite::kAlgebra, loose);
  ASSERT_EQ(base.size(), scaled.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    EXPECT_DOUBLE_EQ(scaled[i].threshold, 10.0 * base[i].threshold);
    EXPECT_EQ(scaled[i].residual, base[i].residual);
  }
}

TEST(Suites, FormatLine) {
  const CheckResult c{"name", 1.5e-3, 1e-2, true, 1};
  const std::string s = format_check(c);
  EXPECT_EQ(s.rfind("name", 0), 0u);
  EXPECT_NE(s.find("1.500000e-03"), std::string::npos);
  EXPECT_EQ(s.substr(s.size() - 4), "PASS");
}

}  // namespace
