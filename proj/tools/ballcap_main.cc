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

// ballcap: command-line front end.
//
// Exit codes: 0 success, 1 scenario failure, 2 configuration error,
// 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ballcap/capacity.h"
#include "ballcap/config.h"
#include "ballcap/energy.h"
#include "ballcap/errors.h"
#include "ballcap/maximal.h"
#include "ballcap/report.h"
#include "ballcap/scenarios.h"

namespace {

using namespace ballcap;

constexpr int kExitOk = 0;
constexpr int kExitScenarioFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// Values given on the command line; unset ones leave the config alone.
struct Overrides {
  std::string config_path;
  std::optional<int> threads;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::string> output;
  std::vector<std::string> formats;
  std::optional<std::string> kernel;
  std::optional<std::string> variant;
  std::optional<double> parameter;
  std::optional<std::string> set;
  std::optional<int> d;
  std::optional<int> m;
  std::vector<int> resolutions;
  std::optional<int> k_max;
  std::vector<double> radii;
  std::optional<std::string> polynomial;
  std::vector<double> alphas;
  std::vector<double> t_values;
  std::optional<int> grid_u;
  std::vector<int> grid_phi;
};

void AddCommon(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config_path, "JSON run configuration");
  app->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "random seed");
  app->add_option("--tol", o.tol, "relative solver tolerance")->check(CLI::PositiveNumber);
  app->add_option("--output", o.output, "output directory");
  app->add_option("--format", o.formats, "output formats (csv, json)")->delimiter(',');
}

void AddProblem(CLI::App* app, Overrides& o) {
  app->add_option("--kernel", o.kernel, "kernel family");
  app->add_option("--variant", o.variant, "holomorphic, real, pluriharmonic or modulus");
  app->add_option("--param", o.parameter, "family parameter");
  app->add_option("--set", o.set, "set kind");
  app->add_option("--d", o.d, "ball dimension")->check(CLI::PositiveNumber);
  app->add_option("--m", o.m, "set resolution")->check(CLI::PositiveNumber);
  app->add_option("--resolutions", o.resolutions, "resolution ladder")->delimiter(',');
  app->add_option("--k-max", o.k_max, "schedule 1 - 2^-k up to this k");
  app->add_option("--radii", o.radii, "explicit radius schedule")->delimiter(',');
  app->add_option("--polynomial", o.polynomial, "zero-set polynomial, e.g. '1 - 2*z1*z2'");
}

RunConfig Resolve(const Overrides& o) {
  RunConfig c = o.config_path.empty() ? RunConfig{} : LoadConfig(o.config_path);
  if (o.threads) c.threads = *o.threads;
  if (o.seed) c.seed = *o.seed;
  if (o.tol) c.solver.relative_tolerance = *o.tol;
  if (o.output) c.output_dir = *o.output;
  if (!o.formats.empty()) c.formats = o.formats;
  if (o.kernel) c.kernel.family = *o.kernel;
  if (o.variant) c.kernel.variant = *o.variant;
  if (o.parameter) c.kernel.parameter = *o.parameter;
  if (o.set) c.set.kind = *o.set;
  if (o.d) {
    c.kernel.dimension = *o.d;
    c.set.dimension = *o.d;
  }
  if (o.m) c.set.resolution = *o.m;
  if (!o.resolutions.empty()) c.resolutions = o.resolutions;
  if (o.k_max) c.schedule.k_max = *o.k_max;
  if (!o.radii.empty()) c.schedule.radii = o.radii;
  if (o.polynomial) c.set.polynomial = *o.polynomial;
  if (!o.alphas.empty()) c.maximal.alphas = o.alphas;
  if (!o.t_values.empty()) {
    c.maximal.t_values = o.t_values;
    c.maximal.t_fractions.clear();
  }
  if (o.grid_u || !o.grid_phi.empty()) {
    const int nu = o.grid_u.value_or(c.maximal.grid_levels.front().first);
    std::vector<int> phis = o.grid_phi;
    if (phis.empty()) {
      for (const auto& level : c.maximal.grid_levels) phis.push_back(level.second);
    }
    c.maximal.grid_levels.clear();
    for (int p : phis) c.maximal.grid_levels.emplace_back(nu, p);
  }
  // Flags are validated like file input.
  return ParseConfig(SerializeConfig(c));
}

std::string OutputDir(const RunConfig& c, const std::string& sub) {
  const std::string dir = EffectiveOutputDir(c) + "/" + sub;
  EnsureDirectory(dir);
  return dir;
}

std::string Describe(const std::vector<std::string>& paths) {
  std::string s;
  for (const auto& p : paths) s += (s.empty() ? "" : ", ") + p;
  return s;
}

std::string FailedCells(const CapacityEstimate& est) {
  std::ostringstream out;
  int shown = 0;
  for (const auto& cell : est.cells) {
    if (cell.error.empty()) continue;
    if (shown++ < 3) {
      out << (shown > 1 ? "; " : "") << "(r=" << FormatNumber(cell.r) << ", m=" << cell.resolution
          << "): " << cell.error;
    }
  }
  if (shown > 3) out << "; " << shown - 3 << " more";
  return out.str();
}

int RunEnergy(const RunConfig& c) {
  const KernelSpec spec = MakeKernel(c.kernel);
  const DiscreteMeasure mu = MakeMeasure(c.set).Normalized();
  EnergyLimitOptions options;
  if (spec.variant() != KernelVariant::kModulus && spec.dimension() <= 3) options.series_degree = 24;
  const EnergyReport report = EnergyLimit(spec, mu, MakeSchedule(c.schedule), options);
  const std::string dir = OutputDir(c, "energy");
  std::vector<std::string> written;
  if (c.WantsCsv()) {
    WriteEnergyCsv(report, dir + "/energy.csv");
    written.push_back(dir + "/energy.csv");
  }
  if (c.WantsJson()) {
    WriteTextFile(dir + "/energy.json", EnergyReportJson(report, spec.Name(), c.set.kind));
    written.push_back(dir + "/energy.json");
  }
  const bool converged = report.classification == EnergyClassification::kConverged;
  std::printf("energy %s on %s: %s, last E_r = %s -> %s\n", spec.Name().c_str(),
              c.set.kind.c_str(), converged ? "converged" : "diverging", FormatNumber(report.e_r_values.back()).c_str(), Describe(written).c_str());
  return kExitOk;
}

CapacityEstimate Sweep(const RunConfig& c, const KernelSpec& spec) {
  const SweepOptions sweep = MakeSweep(c);
  if (!c.set.polynomial.empty()) {
    return PolynomialZeroSetCapacity(spec, Polynomial::Parse(c.set.polynomial, spec.dimension()),
                                     ZeroSetOptions{}, sweep);
  }
  return CapacitySweep(spec, MakeSet(c.set), sweep);
}

int RunCap(const RunConfig& c) {
  const KernelSpec spec = MakeKernel(c.kernel);
  const CapacityEstimate est = Sweep(c, spec);
  const std::string dir = OutputDir(c, "cap");
  std::vector<std::string> written;
  if (c.WantsJson()) {
    WriteTextFile(dir + "/cap.json", CapacityEstimateJson(est));
    written.push_back(dir + "/cap.json");
  }
  if (c.WantsCsv()) {
    WriteCapacityCsv(est, dir + "/cap.csv");
    written.push_back(dir + "/cap.csv");
  }
  const std::string failed = FailedCells(est);
  std::printf("cap %s on %s: %s, extrapolated %s, last resolved %s -> %s\n", est.kernel.c_str(),
              est.set.c_str(), ClassificationName(est.classification).c_str(),
              FormatNumber(est.extrapolated_cap).c_str(), FormatNumber(est.last_resolved_cap).c_str(),
              Describe(written).c_str());
  if (!failed.empty()) {
    std::fprintf(stderr, "ballcap: failed cells %s\n", failed.c_str());
    return kExitNumerical;
  }
  return kExitOk;
}

double SingleRadius(const RunConfig& c, const std::optional<double>& r) {
  if (r) {
    if (!(*r > 0.0 && *r < 1.0)) throw ConfigError("r", "radius must lie in (0, 1)");
    return *r;
  }
  return MakeSchedule(c.schedule).back();
}

GramianProblem Problem(const RunConfig& c, const KernelSpec& spec, double r) {
  return GramianProblem::Build(spec, Discretize(MakeSet(c.set)), r, c.threads);
}

int RunEqMeasure(const RunConfig& c, const std::optional<double>& radius) {
  const KernelSpec spec = MakeKernel(c.kernel);
  const double r = SingleRadius(c, radius);
  const GramianProblem problem = Problem(c, spec, r);
  EquilibriumResult eq;
  try {
    eq = SolveEquilibrium(problem, MakeSolver(c.solver));
  } catch (const ConvergenceFailure& failure) {
    std::fprintf(stderr, "ballcap: (r=%s, m=%d): %s\n", FormatNumber(r).c_str(), c.set.resolution,
                 failure.what());
    return kExitNumerical;
  }
  const std::string dir = OutputDir(c, "eqmeasure");
  std::vector<std::string> written;
  if (c.WantsJson()) {
    WriteTextFile(dir + "/eqmeasure.json", EquilibriumJson(eq, spec.Name(), c.set.kind, r));
    written.push_back(dir + "/eqmeasure.json");
  }
  if (c.WantsCsv()) {
    std::vector<double> w(eq.weights.data(), eq.weights.data() + eq.weights.size());
    WriteMeasureCsv(DiscreteMeasure(problem.points, std::move(w)), dir + "/eqmeasure.csv");
    written.push_back(dir + "/eqmeasure.csv");
  }
  std::printf("eqmeasure %s on %s at r=%s: cap_r %s, gap %s -> %s\n", spec.Name().c_str(),
              c.set.kind.c_str(), FormatNumber(r).c_str(), FormatNumber(eq.cap_r).c_str(),
              FormatNumber(eq.fw_gap).c_str(), Describe(written).c_str());
  return kExitOk;
}

int RunDual(const RunConfig& c, const std::optional<double>& radius) {
  const KernelSpec spec = MakeKernel(c.kernel);
  const double r = SingleRadius(c, radius);
  DualResult dual;
  try {
    dual = SolveDual(Problem(c, spec, r), MakeSolver(c.solver));
  } catch (const ConvergenceFailure& failure) {
    std::fprintf(stderr, "ballcap: (r=%s, m=%d): %s\n", FormatNumber(r).c_str(), c.set.resolution,
                 failure.what());
    return kExitNumerical;
  }
  const std::string dir = OutputDir(c, "dual");
  std::vector<std::string> written;
  if (c.WantsJson()) {
    WriteTextFile(dir + "/dual.json", DualJson(dual, spec.Name(), c.set.kind, r));
    written.push_back(dir + "/dual.json");
  }
  std::printf("dual %s on %s at r=%s: ||f||^2 %s, min Re f on F %s, product %s -> %s\n",
              spec.Name().c_str(), c.set.kind.c_str(), FormatNumber(r).c_str(),
              FormatNumber(dual.norm_sq).c_str(), FormatNumber(dual.min_re_on_F).c_str(),
              FormatNumber(dual.duality_product).c_str(), Describe(written).c_str());
  return kExitOk;
}

int RunMaximal(const RunConfig& c) {
  const KernelSpec h2 = KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic);
  const WeakTypeReport report = WeakTypeExperiment(h2, WeakTypeFunctions(c), MakeWeakType(c));
  const std::string dir = OutputDir(c, "maximal");
  std::vector<std::string> written;
  if (c.WantsCsv()) {
    WriteWeakTypeCsv(report, dir + "/maximal.csv");
    written.push_back(dir + "/maximal.csv");
  }
  if (c.WantsJson()) {
    WriteTextFile(dir + "/maximal.json", WeakTypeJson(report));
    written.push_back(dir + "/maximal.json");
  }
  std::printf("maximal %zu rows: max ratio %s, refinement growth %s -> %s\n", report.rows.size(),
              FormatNumber(report.max_ratio).c_str(), FormatNumber(report.refinement_growth).c_str(),
              Describe(written).c_str());
  return kExitOk;
}

int RunUnbounded(const RunConfig& c) {
  const KernelSpec spec = MakeKernel(c.kernel).WithVariant(KernelVariant::kHolomorphic);
  const SetDescription set = MakeSet(c.set);
  std::vector<double> radii;
  for (int n = 1; n <= c.unbounded.terms; ++n) radii.push_back(1.0 - std::pow(c.unbounded.base, -n));
  SweepOptions sweep = MakeSweep(c);
  sweep.schedule = radii;
  const CapacityEstimate est = CapacitySweep(spec, set, sweep);
  UnboundednessOptions options;
  options.solver = sweep.solver;
  const UnboundednessFunction f =
      BuildUnboundednessFunction(spec, set, est.classification, radii, options);
  const UnboundednessSummary summary = SummarizeUnboundedness(f);
  const std::string dir = OutputDir(c, "unbounded");
  std::vector<std::string> written;
  if (c.WantsCsv()) {
    WriteUnboundednessCsv(summary, dir + "/unbounded.csv");
    written.push_back(dir + "/unbounded.csv");
  }
  if (c.WantsJson()) {
    WriteTextFile(dir + "/unbounded.json", UnboundednessJson(summary, spec.Name(), c.set.kind));
    written.push_back(dir + "/unbounded.json");
  }
  const auto& last = summary.rows.back();
  std::printf("unbounded %s on %s: N=%d, min Re F_N(r_N p) %s, min Re F_N(p) %s, ||F_N|| %s <= %s -> %s\n",
              spec.Name().c_str(), c.set.kind.c_str(), last.n,
              FormatNumber(last.min_re_at_radius).c_str(), FormatNumber(last.min_re_on_set).c_str(),
              FormatNumber(last.norm).c_str(), FormatNumber(last.budget).c_str(),
              Describe(written).c_str());
  return kExitOk;
}

int RunScenarios(const RunConfig& c, const std::string& which) {
  std::vector<std::string> ids;
  if (which == "all") {
    ids = ScenarioIds();
  } else {
    ids = {which};
  }
  int failed = 0;
  for (const auto& id : ids) {
    const ScenarioReport rep = RunScenario(id, c, true);
    int bad = 0;
    for (const auto& check : rep.checks) bad += check.Passes() ? 0 : 1;
    std::printf("scenario %-22s %s  %zu checks, %d failed, %.1fs\n", id.c_str(),
                rep.pass() ? "PASS" : "FAIL", rep.checks.size(), bad, rep.seconds);
    for (const auto& check : rep.checks) {
      if (!check.Passes()) {
        std::printf("  failed %s: observed %s, expected %s, tolerance %s\n", check.name.c_str(),
                    FormatNumber(check.observed).c_str(), FormatNumber(check.expected).c_str(),
                    FormatNumber(check.tolerance).c_str());
      }
    }
    std::fflush(stdout);
    failed += rep.pass() ? 0 : 1;
  }
  std::printf("%zu scenarios, %d failed, reports under %s/scenarios\n", ids.size(), failed,
              EffectiveOutputDir(c).c_str());
  return failed == 0 ? kExitOk : kExitScenarioFailure;
}

int ListKernels() {
  const std::vector<std::pair<std::string, std::string>> families = {
      {FamilyName(KernelFamily::kDruryArveson), "1 / (1 - s)"},
      {FamilyName(KernelFamily::kDirichletLog), "log(e / (1 - s))"},
      {FamilyName(KernelFamily::kWeightedDirichlet), "(1 - s)^-a, parameter a > 0"},
      {FamilyName(KernelFamily::kHardyPoisson), "Poisson kernel, a_n = a_-n = 1"},
      {FamilyName(KernelFamily::kBounded), "1 / (1 - q s), parameter 0 < q < 1"},
      {FamilyName(KernelFamily::kCustom), "coefficients from kernel.coefficient_file"},
  };
  for (const auto& [name, formula] : families) std::printf("%-20s %s\n", name.c_str(), formula.c_str());
  std::printf("variants: ");
  for (KernelVariant v : {KernelVariant::kHolomorphic, KernelVariant::kRealPart,
                          KernelVariant::kPluriharmonic, KernelVariant::kModulus}) {
    std::printf("%s ", VariantName(v).c_str());
  }
  std::printf("\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ballcap: kernel energies and capacities on the unit ball"};
  app.require_subcommand(1);
  Overrides o;
  std::optional<double> radius;
  std::string scenario_id;

  CLI::App* energy = app.add_subcommand("energy", "E_r along the radius schedule");
  CLI::App* cap = app.add_subcommand("cap", "capacity sweep over radii and resolutions");
  CLI::App* eq = app.add_subcommand("eqmeasure", "equilibrium measure at one radius");
  CLI::App* dual = app.add_subcommand("dual", "dual certificate at one radius");
  CLI::App* maximal = app.add_subcommand("maximal", "weak-type maximal-function experiment");
  CLI::App* unbounded = app.add_subcommand("unbounded", "partial sums blowing up on the set");
  CLI::App* scenario = app.add_subcommand("scenario", "run a scenario by id, or all");
  CLI::App* list = app.add_subcommand("kernels-list", "list kernel families and variants");
  for (CLI::App* sub : {energy, cap, eq, dual, maximal, unbounded, scenario}) AddCommon(sub, o);
  for (CLI::App* sub : {energy, cap, eq, dual, unbounded}) AddProblem(sub, o);
  for (CLI::App* sub : {eq, dual}) sub->add_option("--r", radius, "radius in (0, 1)");
  maximal->add_option("--alpha", o.alphas, "aperture values")->delimiter(',');
  maximal->add_option("--t", o.t_values, "absolute levels t")->delimiter(',');
  maximal->add_option("--grid-u", o.grid_u, "grid points in |z1|^2")->check(CLI::PositiveNumber);
  maximal->add_option("--grid-phi", o.grid_phi, "angular grid per level")->delimiter(',');
  scenario->add_option("id", scenario_id, "scenario id or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (list->parsed()) return ListKernels();
    const RunConfig c = Resolve(o);
    if (energy->parsed()) return RunEnergy(c);
    if (cap->parsed()) return RunCap(c);
    if (eq->parsed()) return RunEqMeasure(c, radius);
    if (dual->parsed()) return RunDual(c, radius);
    if (maximal->parsed()) return RunMaximal(c);
    if (unbounded->parsed()) return RunUnbounded(c);
    if (scenario->parsed()) return RunScenarios(c, scenario_id);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "ballcap: config error: %s\n", e.what());
    return kExitConfig;
  } catch (const Error& e) {
    std::fprintf(stderr, "ballcap: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitOk;
}
