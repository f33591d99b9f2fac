// Copyright 2026 The ballcap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ballcap/scenarios.h"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "ballcap/errors.h"

namespace ballcap {
namespace {

ScenarioCheck Check(double observed, double expected, double tolerance, CheckRule rule) {
  return {"c", observed, expected, tolerance, rule, "direct"};
}

TEST(CheckRuleTest, Semantics) {
  EXPECT_TRUE(Check(1.05, 1.0, 0.1, CheckRule::kAbsolute).Passes());
  EXPECT_FALSE(Check(1.2, 1.0, 0.1, CheckRule::kAbsolute).Passes());
  EXPECT_TRUE(Check(-2.1, -2.0, 0.1, CheckRule::kRelative).Passes());
  EXPECT_FALSE(Check(0.1, 0.0, 1.0, CheckRule::kRelative).Passes());
  EXPECT_TRUE(Check(-5.0, 0.0, 0.0, CheckRule::kAtMost).Passes());
  EXPECT_FALSE(Check(1e-9, 0.0, 1e-10, CheckRule::kAtMost).Passes());
  EXPECT_TRUE(Check(10.0, 9.99, 0.0, CheckRule::kAtLeast).Passes());
  EXPECT_FALSE(Check(9.5, 9.99, 0.0, CheckRule::kAtLeast).Passes());
  EXPECT_TRUE(Check(1.0, 1.0, 0.0, CheckRule::kFlag).Passes());
  EXPECT_FALSE(Check(0.0, 1.0, 0.0, CheckRule::kFlag).Passes());
  EXPECT_FALSE(
      Check(std::numeric_limits<double>::quiet_NaN(), 0.0, 1.0, CheckRule::kAtMost).Passes());
}

TEST(ScenarioTest, IdsAndDispatch) {
  const auto ids = ScenarioIds();
  ASSERT_EQ(ids.size(), 8u);
  EXPECT_EQ(ids.front(), "hardy_arc");
  EXPECT_THROW(RunScenario("no_such_scenario", RunConfig{}, false), ConfigError);
}

TEST(ScenarioTest, ZeroSetPasses) {
  const ScenarioReport rep = RunScenario("zero_set", RunConfig{}, false);
  EXPECT_TRUE(rep.pass());
  ASSERT_NE(rep.Find("z2_positive"), nullptr);
  EXPECT_EQ(rep.Find("missing"), nullptr);
}

TEST(ScenarioTest, DualAndChoquetIsReproducible) {
  const ScenarioReport a = RunScenario("dual_and_choquet", RunConfig{}, false);
  const ScenarioReport b = RunScenario("dual_and_choquet", RunConfig{}, false);
  EXPECT_TRUE(a.pass());
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].observed, b.checks[i].observed) << a.checks[i].name;
  }
  RunConfig other;
  other.seed += 1;
  const ScenarioReport c = RunScenario("dual_and_choquet", other, false);
  EXPECT_TRUE(c.pass());
}

}  // namespace
}  // namespace ballcap
