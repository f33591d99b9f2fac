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

#ifndef BALLCAP_REPORT_H_
#define BALLCAP_REPORT_H_

#include <string>
#include <vector>

#include "ballcap/capacity.h"
#include "ballcap/energy.h"
#include "ballcap/maximal.h"
#include "ballcap/scenarios.h"

namespace ballcap {

inline constexpr char kReportSchema[] = "ballcap.report/1";

// 17 significant digits; "nan", "inf" and "-inf" for non-finite values.
std::string FormatNumber(double x);

// Creates the directory and its parents; IoError with the path on failure.
void EnsureDirectory(const std::string& dir);
void WriteTextFile(const std::string& path, const std::string& text);

// JSON documents. Every document starts with "schema" and "kind"; field
// order is fixed.
std::string EnergyReportJson(const EnergyReport& report, const std::string& kernel,
                             const std::string& set);
std::string CapacityEstimateJson(const CapacityEstimate& estimate);
std::string EquilibriumJson(const EquilibriumResult& result, const std::string& kernel,
                            const std::string& set, double r);
std::string DualJson(const DualResult& dual, const std::string& kernel, const std::string& set,
                     double r);
std::string WeakTypeJson(const WeakTypeReport& report);
std::string UnboundednessJson(const UnboundednessSummary& summary, const std::string& kernel,
                              const std::string& set);
std::string ScenarioReportJson(const ScenarioReport& report);

// CSV tables with a '#' header describing each column.
void WriteEnergyCsv(const EnergyReport& report, const std::string& path);
void WriteCapacityCsv(const CapacityEstimate& estimate, const std::string& path);
void WriteWeakTypeCsv(const WeakTypeReport& report, const std::string& path);
void WriteUnboundednessCsv(const UnboundednessSummary& summary, const std::string& path);

}  // namespace ballcap

#endif  // BALLCAP_REPORT_H_
