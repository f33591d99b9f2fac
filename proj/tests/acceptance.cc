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

// Runs every scenario and prints one line per acceptance criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "ballcap/config.h"
#include "ballcap/errors.h"
#include "ballcap/scenarios.h"

namespace {

using ballcap::CheckRule;
using ballcap::ScenarioCheck;
using ballcap::ScenarioReport;

// Thresholds as stated by the criteria; they override the scenario's own
// expected value or tolerance where given.
struct Pin {
  std::string scenario;
  std::string pattern;
  std::optional<double> expected;
  std::optional<double> tolerance;
};

struct Criterion {
  std::string name;
  std::vector<Pin> pins;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> criteria = {
      {"hardy_arc_capacity",
       {{"hardy_arc", R"(arc_[0-9.]+_cap)", std::nullopt, 0.02},
        {"hardy_arc", R"(arc_[0-9.]+_seconds)", 60.0, 0.0}}},
      {"flat_circle_energies",
       {{"flat_vs_tangential", "flat_re_energy_limit", 1.0, 1e-3},
        {"flat_vs_tangential", "flat_modulus_energy_vs_integral", 0.0, 0.01},
        {"flat_vs_tangential", "flat_modulus_log_fit_r_squared", 0.99, 0.0}}},
      {"tangential_circle_zero",
       {{"flat_vs_tangential", "tangential_classified_zero", std::nullopt, std::nullopt},
        {"flat_vs_tangential", "tangential_last_cap", 1e-3, 0.0},
        {"flat_vs_tangential", "tangential_decreasing_tail", std::nullopt, std::nullopt}}},
      {"pushforward_identity",
       {{"pushforward_identity", R"(arc_[0-9.]+_(matched_cells|extrapolated))", std::nullopt,
         0.05}}},
      {"single_atom_closed_form",
       {{"abstract_axioms", "single_atom_closed_form", 0.0, 1e-12}}},
      {"qp_duality", {{"dual_and_choquet", R"(.*_duality_product)", 0.0, 1e-8}}},
      {"equilibrium_certificate", {}},
      {"abstract_axioms",
       {{"abstract_axioms", R"(.*_A1_symmetry|.*_A2_bilinearity)", 0.0, 1e-12},
        {"abstract_axioms", R"(.*_P[123]_.*)", 0.0, 1e-10}}},
      {"energy_series_cross_validation",
       {{"abstract_axioms", "energy_series_agreement", 0.0, 1e-8}}},
      {"weak_type",
       {{"weak_type", "max_ratio_finite", std::nullopt, std::nullopt},
        {"weak_type", "refinement_growth", 10.0, 0.0}}},
      {"unboundedness",
       {{"unboundedness", "point_re_at_last_radius", 9.99, 0.0},
        {"unboundedness", "point_norm_within_budget", 0.0, 1e-9}}},
      {"monotonicity_battery", {}},
  };
  return criteria;
}

bool Judge(const ScenarioCheck& check, const Pin& pin) {
  ScenarioCheck c = check;
  if (pin.expected) c.expected = *pin.expected;
  if (pin.tolerance) c.tolerance = *pin.tolerance;
  return c.Passes();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome EvaluatePins(const Criterion& criterion,
                     const std::map<std::string, ScenarioReport>& reports) {
  Outcome out;
  int matched = 0;
  std::vector<std::string> failures;
  for (const Pin& pin : criterion.pins) {
    const auto it = reports.find(pin.scenario);
    if (it == reports.end()) {
      out.pass = false;
      failures.push_back(pin.scenario + " did not run");
      continue;
    }
    const std::regex re(pin.pattern);
    int here = 0;
    for (const ScenarioCheck& c : it->second.checks) {
      if (!std::regex_match(c.name, re)) continue;
      ++here;
      if (!Judge(c, pin)) {
        out.pass = false;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s=%.6g", c.name.c_str(), c.observed);
        failures.push_back(buf);
      }
    }
    if (here == 0) {
      out.pass = false;
      failures.push_back("no check matches " + pin.pattern);
    }
    matched += here;
  }
  out.detail = std::to_string(matched) + " checks";
  if (!failures.empty()) {
    out.detail += "; failing:";
    for (const auto& f : failures) out.detail += " " + f;
  }
  return out;
}

Outcome EvaluateCertificate(const std::map<std::string, ScenarioReport>& reports) {
  double worst = std::numeric_limits<double>::infinity();
  long instances = 0;
  for (const auto& [id, rep] : reports) {
    if (rep.solved_instances == 0) continue;
    worst = std::min(worst, rep.min_variational_residual);
    instances += rep.solved_instances;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "min residual %.3g over %ld instances (floor -1e-8)", worst,
                instances);
  return {instances > 0 && worst >= -1e-8, buf};
}

Outcome EvaluateMonotonicity(const std::map<std::string, ScenarioReport>& reports) {
  Outcome out;
  int sweeps = 0;
  double worst_r = 0.0, worst_m = 0.0;
  for (const auto& [id, rep] : reports) {
    for (const auto& est : rep.sweeps) {
      ++sweeps;
      const auto& m = est.monotonicity;
      worst_r = std::max(worst_r, m.worst_r_violation);
      if (m.resolution_nested) worst_m = std::max(worst_m, m.worst_resolution_violation);
      if (!m.r_monotone || (m.resolution_nested && !m.resolution_monotone)) {
        out.pass = false;
        out.detail += " " + id + ":" + est.kernel + "/" + est.set;
      }
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "%d sweeps, worst r violation %.3g, worst refinement %.3g%s",
                sweeps, worst_r, worst_m, out.pass ? "" : "; failing:");
  out.detail = buf + out.detail;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  ballcap::RunConfig config;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--output") == 0 && i + 1 < argc) {
      config.output_dir = argv[++i];
    } else {
      std::fprintf(stderr, "usage: acceptance [--output DIR]\n");
      return 2;
    }
  }
  std::map<std::string, ScenarioReport> reports;
  for (const std::string& id : ballcap::ScenarioIds()) {
    try {
      ScenarioReport rep = ballcap::RunScenario(id, config, true);
      std::printf("scenario %-22s %s %.1fs\n", id.c_str(), rep.pass() ? "PASS" : "FAIL",
                  rep.seconds);
      reports.emplace(id, std::move(rep));
    } catch (const ballcap::Error& e) {
      std::printf("scenario %-22s ERROR %s\n", id.c_str(), e.what());
    }
    std::fflush(stdout);
  }
  int failed = 0;
  for (const Criterion& c : Criteria()) {
    Outcome o;
    if (c.name == "equilibrium_certificate") {
      o = EvaluateCertificate(reports);
    } else if (c.name == "monotonicity_battery") {
      o = EvaluateMonotonicity(reports);
    } else {
      o = EvaluatePins(c, reports);
    }
    if (!o.pass) ++failed;
    std::printf("%s %-32s %s\n", o.pass ? "PASS" : "FAIL", c.name.c_str(), o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", Criteria().size(), failed);
  return failed == 0 ? 0 : 1;
}
