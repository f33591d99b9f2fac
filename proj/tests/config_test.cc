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

#include "ballcap/config.h"

#include <cstdlib>
#include <string>

#include <gtest/gtest.h>

#include "ballcap/errors.h"

namespace ballcap {
namespace {

std::string Data(const std::string& name) { return std::string(BALLCAP_TEST_DATA) + "/" + name; }

std::string KeyPathOf(const std::string& text) {
  try {
    ParseConfig(text);
  } catch (const ConfigError& e) {
    return e.key_path();
  }
  return "<accepted>";
}

TEST(ConfigTest, DefaultsRoundTrip) {
  const RunConfig c;
  EXPECT_EQ(ParseConfig(SerializeConfig(c)), c);
  EXPECT_EQ(ParseConfig("{}"), c);
}

TEST(ConfigTest, ModifiedRoundTrip) {
  RunConfig c;
  c.kernel.family = "weighted-dirichlet";
  c.kernel.parameter = 0.25;
  c.set.kind = "arc";
  c.set.t1 = 1.0;
  c.schedule.radii = {0.5, 0.75};
  c.resolutions = {9, 17};
  c.maximal.grid_levels = {{4, 4}};
  c.tolerances.pushforward_relative = 0.01;
  c.seed = 99;
  c.formats = {"json"};
  const RunConfig back = ParseConfig(SerializeConfig(c));
  EXPECT_EQ(back, c);
  EXPECT_TRUE(back.WantsJson());
  EXPECT_FALSE(back.WantsCsv());
}

TEST(ConfigTest, ErrorsCarryKeyPaths) {
  EXPECT_EQ(KeyPathOf(R"({"kernel": {"colour": 1}})"), "kernel.colour");
  EXPECT_EQ(KeyPathOf(R"({"kernel": {"dimension": "two"}})"), "kernel.dimension");
  EXPECT_EQ(KeyPathOf(R"({"schema": "other/1"})"), "schema");
  EXPECT_EQ(KeyPathOf(R"({"set": {"kind": "square"}})"), "set.kind");
  EXPECT_EQ(KeyPathOf(R"({"threads": 0})"), "threads");
  EXPECT_EQ(KeyPathOf(R"({"bogus": true})"), "bogus");
}

TEST(ConfigTest, NegativeWeightIsRejectedAtItsIndex) {
  try {
    LoadConfig(Data("negative_weight.json"));
    FAIL() << "accepted a negative weight";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key_path(), "set.weights[1]");
  }
}

TEST(ConfigTest, SyntaxErrorReportsLine) {
  try {
    LoadConfig(Data("syntax_error.json"));
    FAIL() << "accepted malformed JSON";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(LoadConfig(Data("does_not_exist.json")), Error);
}

TEST(ConfigTest, OutputDirectoryEnvironmentOverride) {
  RunConfig c;
  c.output_dir = "configured";
  unsetenv("BALLCAP_OUTPUT_DIR");
  EXPECT_EQ(EffectiveOutputDir(c), "configured");
  setenv("BALLCAP_OUTPUT_DIR", "/tmp/from-env", 1);
  EXPECT_EQ(EffectiveOutputDir(c), "/tmp/from-env");
  unsetenv("BALLCAP_OUTPUT_DIR");
}

TEST(ConfigTest, FactoriesBuildTheConfiguredObjects) {
  const RunConfig c = LoadConfig(Data("arc.json"));
  const KernelSpec k = MakeKernel(c.kernel);
  EXPECT_EQ(k.Name(), "hardy-poisson/real/d=1");
  const SetDescription s = MakeSet(c.set);
  EXPECT_EQ(s.kind, SetKind::kArc);
  EXPECT_EQ(s.resolution, 65);
  EXPECT_NEAR(s.NormalizedLength(), 0.25, 1e-15);
  const auto schedule = MakeSchedule(c.schedule);
  ASSERT_EQ(schedule.size(), 14u);
  EXPECT_EQ(schedule.front(), 0.5);
  const DiscreteMeasure mu = MakeMeasure(c.set);
  EXPECT_EQ(mu.size(), 65u);
  EXPECT_TRUE(mu.is_probability());
}

}  // namespace
}  // namespace ballcap
