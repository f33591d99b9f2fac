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

#ifndef BALLCAP_SCENARIOS_H_
#define BALLCAP_SCENARIOS_H_

#include <string>
#include <utility>
#include <vector>

#include "ballcap/capacity.h"
#include "ballcap/config.h"

namespace ballcap {

enum class CheckRule {
  kAbsolute,  // |observed - expected| <= tolerance
  kRelative,  // |observed - expected| <= tolerance * |expected|
  kAtMost,    // observed <= expected + tolerance
  kAtLeast,   // observed >= expected - tolerance
  kFlag,      // observed == expected (booleans as 0/1)
};
std::string CheckRuleName(CheckRule rule);

// One comparison. `basis` says where the expected value comes from:
// "cited" (a stated value), "oracle" (independent computation),
// "closed-form", or "direct" (a defining identity).
struct ScenarioCheck {
  std::string name;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  CheckRule rule = CheckRule::kAbsolute;
  std::string basis;

  bool Passes() const;
};

struct ScenarioReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ScenarioCheck> checks;
  std::vector<std::string> notes;
  std::vector<std::string> artifacts;
  // Sweeps run by the scenario, weights dropped.
  std::vector<CapacityEstimate> sweeps;
  // Smallest variational residual over every solved instance.
  double min_variational_residual = 0.0;
  long solved_instances = 0;
  double seconds = 0.0;

  bool pass() const;
  const ScenarioCheck* Find(const std::string& name) const;
};

// Evaluation of partial sums F_N of an UnboundednessFunction.
struct UnboundednessSummary {
  struct Row {
    int n = 0;
    double r = 0.0;
    double cap = 0.0;
    double min_re_at_radius = 0.0;   // min_j Re F_n(r_n p_j)
    double min_re_on_set = 0.0;      // min_j Re F_n(p_j)
    double norm = 0.0;               // ||F_n||
    double budget = 0.0;             // sum_{k <= n} cap_k^{1/2}
    double antipodal = 0.0;          // |F_n(-r_n p_0)|
  };
  std::vector<Row> rows;
};
UnboundednessSummary SummarizeUnboundedness(const UnboundednessFunction& f);

std::vector<std::string> ScenarioIds();

// Normalized h^2_2 kernels at the configured radii in seeded directions,
// then equilibrium potentials of the configured arcs. Solved equilibria
// are appended to `solved` when given.
std::vector<TestFunction> WeakTypeFunctions(const RunConfig& config,
                                            std::vector<EquilibriumResult>* solved = nullptr);

ScenarioReport ScenarioHardyArc(const RunConfig& config);
ScenarioReport ScenarioFlatVsTangentialCircle(const RunConfig& config);
ScenarioReport ScenarioPushforwardIdentity(const RunConfig& config);
ScenarioReport ScenarioAbstractAxioms(const RunConfig& config);
ScenarioReport ScenarioDualAndChoquet(const RunConfig& config);
ScenarioReport ScenarioUnboundedness(const RunConfig& config);
ScenarioReport ScenarioZeroSet(const RunConfig& config);
ScenarioReport ScenarioWeakType(const RunConfig& config);

// Dispatch by id; throws ConfigError for unknown ids. When `write` is set
// the report and its artifacts go under <output>/scenarios/<id>/.
ScenarioReport RunScenario(const std::string& id, const RunConfig& config, bool write = true);

}  // namespace ballcap

#endif  // BALLCAP_SCENARIOS_H_
