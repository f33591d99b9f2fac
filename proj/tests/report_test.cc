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

#include "ballcap/report.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace ballcap {
namespace {

std::string FirstDataLine(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') return line;
  return {};
}

std::string TempDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("ballcap-report-test-" + name);
  std::filesystem::remove_all(dir);
  EnsureDirectory(dir.string());
  return dir.string();
}

TEST(ReportTest, NumbersRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, 2.0 / 3.0 * 1e-300, 6.02214076e23, -0.0, 1.0}) {
    EXPECT_EQ(std::strtod(FormatNumber(x).c_str(), nullptr), x);
  }
  EXPECT_EQ(FormatNumber(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(FormatNumber(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(FormatNumber(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(ReportTest, JsonLeadsWithSchemaAndKind) {
  EquilibriumResult eq;
  eq.weights = Eigen::VectorXd::Constant(2, 0.5);
  eq.energy = 2.0;
  eq.cap_r = 0.5;
  eq.fw_gap = std::numeric_limits<double>::quiet_NaN();
  const auto j = nlohmann::ordered_json::parse(EquilibriumJson(eq, "k", "s", 0.9));
  auto it = j.begin();
  EXPECT_EQ(it.key(), "schema");
  EXPECT_EQ(*it, kReportSchema);
  ++it;
  EXPECT_EQ(it.key(), "kind");
  EXPECT_TRUE(j.contains("weights"));
  bool saw_null = false;
  for (const auto& item : j.items()) saw_null = saw_null || item.value().is_null();
  EXPECT_TRUE(saw_null);
}

TEST(ReportTest, EnergyCsvColumns) {
  EnergyReport r;
  r.r_grid = {0.5, 0.75};
  r.e_r_values = {1.0, 1.5};
  r.series_values = {std::nullopt, 1.5};
  r.increments = {0.0, 0.5};
  const std::string path = TempDir("energy") + "/energy.csv";
  WriteEnergyCsv(r, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, std::string("# schema: ") + kReportSchema);
  EXPECT_EQ(FirstDataLine(path), "r,E_r,series_E_r,increment");
}

TEST(ReportTest, WeakTypeCsvColumns) {
  WeakTypeReport r;
  r.rows.push_back({"f", 2.0, 0, 64, 0.5, 3, 0.9, 0.1, 0.025, ""});
  const std::string path = TempDir("weak") + "/maximal.csv";
  WriteWeakTypeCsv(r, path);
  EXPECT_EQ(FirstDataLine(path),
            "t,cap_estimate,ratio,function,alpha,grid_level,grid_size,superlevel_size,capacity_r");
  const auto j = nlohmann::json::parse(WeakTypeJson(r));
  EXPECT_EQ(j["schema"], kReportSchema);
}

TEST(ReportTest, UnwritableDirectoryRaises) {
  EXPECT_THROW(WriteTextFile("/proc/ballcap-no-such-dir/x.json", "{}"), Error);
}

}  // namespace
}  // namespace ballcap
