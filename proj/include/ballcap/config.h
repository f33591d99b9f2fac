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

#ifndef BALLCAP_CONFIG_H_
#define BALLCAP_CONFIG_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ballcap/capacity.h"
#include "ballcap/kernels.h"
#include "ballcap/maximal.h"
#include "ballcap/measures.h"
#include "ballcap/polynomial.h"
#include "ballcap/simplex_qp.h"

namespace ballcap {

inline constexpr char kConfigSchema[] = "ballcap.config/1";

struct KernelConfig {
  std::string family = "drury-arveson";
  std::string variant = "real";
  int dimension = 2;
  double parameter = 0.0;
  std::string coefficient_file;  // family "custom"
  int truncation = CoefficientSequence::kDefaultTruncation;
  double series_tolerance = 1e-10;
  bool operator==(const KernelConfig&) const = default;
};

// Points are stored as 2d reals (re, im per coordinate).
struct SetConfig {
  std::string kind = "flat-circle";
  int dimension = 2;
  std::vector<std::vector<double>> points;
  std::vector<double> weights;  // optional measure on `points`
  std::vector<double> direction;
  double t0 = 0.0;
  double t1 = 6.283185307179586;
  std::vector<double> base_angles;
  std::vector<int> frequencies;
  int resolution = 64;
  int orbit_resolution = 64;
  std::string polynomial;  // zero-set input for `cap`
  bool operator==(const SetConfig&) const = default;
};

// r_k = 1 - 2^{-k} for k_min..k_max unless `radii` is given.
struct ScheduleConfig {
  int k_min = 1;
  int k_max = 14;
  std::vector<double> radii;
  bool operator==(const ScheduleConfig&) const = default;
};

struct SolverConfig {
  double relative_tolerance = 1e-9;
  double absolute_tolerance = 1e-8;
  long max_iterations = 100000;
  // tighter pair used inside sweeps
  double sweep_relative_tolerance = 1e-12;
  double sweep_absolute_tolerance = 1e-11;
  bool operator==(const SolverConfig&) const = default;
};

struct MaximalConfig {
  std::vector<double> alphas = {2.0, 4.0};
  std::vector<double> t_fractions = {0.75, 0.5, 0.25};
  std::vector<double> t_values;
  std::vector<std::pair<int, int>> grid_levels = {{8, 8}, {8, 16}};
  int radial = 64;
  int angular = 32;
  int tangential = 8;
  double r_max = 0.999;
  double kappa = 4.0;
  std::vector<double> kernel_radii = {0.3, 0.5, 0.7, 0.8, 0.9, 0.95, 0.97, 0.98, 0.99, 0.995};
  std::vector<double> potential_lengths = {0.125, 0.25, 0.5};
  int potential_resolution = 17;
  double potential_radius = 0.95;
  bool operator==(const MaximalConfig&) const = default;
};

// r_n = 1 - base^{-n}, n = 1..terms.
struct UnboundedConfig {
  int terms = 10;
  double base = 4.0;
  int resolution = 64;
  bool operator==(const UnboundedConfig&) const = default;
};

// Shared by the scenarios and the acceptance suite.
struct Tolerances {
  double hardy_length_relative = 0.02;
  double hardy_uniform_relative = 0.05;
  double full_circle_absolute = 1e-3;
  double flat_energy_absolute = 1e-6;
  double modulus_energy_relative = 0.01;
  double log_fit_r_squared = 0.99;
  double zero_threshold = 1e-3;
  int zero_window = 5;
  int zero_k_max = 24;
  double pushforward_relative = 0.05;
  double single_atom_absolute = 1e-12;
  double duality_relative = 1e-8;
  double variational_floor = 1e-8;
  double axiom_absolute = 1e-12;
  double series_relative = 1e-8;
  double weak_type_growth = 10.0;
  double unbounded_relative = 1e-3;
  double norm_budget_slack = 1e-9;
  double monotonicity_slack = 1e-10;
  double resolved_relative = 1e-3;
  bool operator==(const Tolerances&) const = default;
};

struct TrialCounts {
  int dual_sets = 20;
  int axiom_sets = 100;
  int series_measures = 200;
  int comparability_draws = 100000;
  int triangle_draws = 10000;
  bool operator==(const TrialCounts&) const = default;
};

struct RunConfig {
  KernelConfig kernel;
  SetConfig set;
  ScheduleConfig schedule;
  std::vector<int> resolutions;
  SolverConfig solver;
  MaximalConfig maximal;
  UnboundedConfig unbounded;
  Tolerances tolerances;
  TrialCounts trials;
  std::uint64_t seed = 20260101;
  int threads = 1;
  std::string output_dir = "ballcap-out";
  std::vector<std::string> formats = {"csv", "json"};
  bool operator==(const RunConfig&) const = default;

  bool WantsCsv() const;
  bool WantsJson() const;
};

// Parses and validates JSON text. Unknown keys, wrong types and
// out-of-range values raise ConfigError carrying the key path; syntax errors
// carry line and column. Missing keys keep their defaults.
RunConfig ParseConfig(const std::string& text);
RunConfig LoadConfig(const std::string& path);
std::string SerializeConfig(const RunConfig& config);

// BALLCAP_OUTPUT_DIR wins over the configured directory when set.
std::string EffectiveOutputDir(const RunConfig& config);

KernelSpec MakeKernel(const KernelConfig& kernel);
SetDescription MakeSet(const SetConfig& set);
// Measure on the discretized set: configured weights on `points`, uniform
// otherwise.
DiscreteMeasure MakeMeasure(const SetConfig& set);
std::vector<double> MakeSchedule(const ScheduleConfig& schedule);
SimplexQpOptions MakeSolver(const SolverConfig& solver);
SweepOptions MakeSweep(const RunConfig& config);
WeakTypeOptions MakeWeakType(const RunConfig& config);

}  // namespace ballcap

#endif  // BALLCAP_CONFIG_H_
