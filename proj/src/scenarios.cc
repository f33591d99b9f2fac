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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "ballcap/energy.h"
#include "ballcap/errors.h"
#include "ballcap/maximal.h"
#include "ballcap/polynomial.h"
#include "ballcap/report.h"

namespace ballcap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Str(double x) { return FormatNumber(x); }

std::string Join(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

void Add(ScenarioReport& rep, std::string name, double observed, double expected,
         double tolerance, CheckRule rule, std::string basis) {
  rep.checks.push_back({std::move(name), observed, expected, tolerance, rule, std::move(basis)});
}

void AddFlag(ScenarioReport& rep, std::string name, bool value, std::string basis) {
  Add(rep, std::move(name), value ? 1.0 : 0.0, 1.0, 0.0, CheckRule::kFlag, std::move(basis));
}

void Track(ScenarioReport& rep, const EquilibriumResult& eq) {
  if (rep.solved_instances == 0 || eq.variational_residual < rep.min_variational_residual) {
    rep.min_variational_residual = eq.variational_residual;
  }
  ++rep.solved_instances;
}

void Track(ScenarioReport& rep, CapacityEstimate est) {
  for (auto& cell : est.cells) {
    if (cell.result) {
      Track(rep, *cell.result);
      cell.result->weights.resize(0);
    }
  }
  rep.sweeps.push_back(std::move(est));
}

// Schedules 1 - 2^{-k}.
std::vector<double> Dyadic(int k_min, int k_max) {
  std::vector<double> out;
  for (int k = k_min; k <= k_max; ++k) out.push_back(1.0 - std::ldexp(1.0, -k));
  return out;
}

SimplexQpOptions TightSolver(const RunConfig& c) {
  SimplexQpOptions o = MakeSolver(c.solver);
  o.relative_tolerance = c.solver.sweep_relative_tolerance;
  o.absolute_tolerance = c.solver.sweep_absolute_tolerance;
  return o;
}

BallPoint RandomSpherePoint(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> z(d);
  for (auto& c : z) c = Complex(g(rng), g(rng));
  return BallPoint::Normalized(std::move(z));
}

BallPoint RandomBallPoint(int d, std::mt19937_64& rng, double max_radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return RandomSpherePoint(d, rng).Scaled(max_radius * std::sqrt(u(rng)));
}

std::vector<BallPoint> RandomBoundarySet(int d, int n, std::mt19937_64& rng) {
  std::vector<BallPoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back(RandomSpherePoint(d, rng));
  return pts;
}

struct NamedKernel {
  std::string label;
  KernelSpec spec;
};

// Families whose real part is nonnegative on the closed ball.
std::vector<NamedKernel> PositiveKernels() {
  return {
      {"drury-arveson", KernelSpec::DruryArveson(2)},
      {"h2", KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic)},
      {"dirichlet-log", KernelSpec::DirichletLog(2)},
      {"weighted-dirichlet-0.5", KernelSpec::WeightedDirichlet(2, 0.5)},
      {"hardy-poisson", KernelSpec::HardyPoisson(1)},
      {"bounded-0.5", KernelSpec::Bounded(2, 0.5)},
  };
}

EquilibriumResult Solve(ScenarioReport& rep, const KernelSpec& spec,
                        const std::vector<BallPoint>& pts, double r,
                        const SimplexQpOptions& solver) {
  EquilibriumResult eq = SolveEquilibrium(GramianProblem::Build(spec, pts, r), solver);
  Track(rep, eq);
  return eq;
}

double CapOf(ScenarioReport& rep, const KernelSpec& spec, const std::vector<BallPoint>& pts,
             double r, const SimplexQpOptions& solver) {
  if (pts.empty()) return 0.0;
  return Solve(rep, spec, pts, r, solver).cap_r;
}

// Largest relative deviation of interior weights from their mean, skipping
// `skip` atoms at each end.
double InteriorNonUniformity(const Eigen::VectorXd& w, int skip) {
  const Eigen::Index n = w.size();
  if (n <= 2 * skip) return 0.0;
  const Eigen::VectorXd mid = w.segment(skip, n - 2 * skip);
  const double mean = mid.mean();
  return (mid.array() / mean - 1.0).abs().maxCoeff();
}

std::string WriteArtifacts(ScenarioReport& rep, const RunConfig& config) {
  const std::string dir = EffectiveOutputDir(config) + "/scenarios/" + rep.id;
  EnsureDirectory(dir);
  for (std::size_t i = 0; i < rep.sweeps.size(); ++i) {
    const std::string base = dir + "/sweep_" + std::to_string(i);
    if (config.WantsJson()) {
      WriteTextFile(base + ".json", CapacityEstimateJson(rep.sweeps[i]));
      rep.artifacts.push_back(base + ".json");
    }
    if (config.WantsCsv()) {
      WriteCapacityCsv(rep.sweeps[i], base + ".csv");
      rep.artifacts.push_back(base + ".csv");
    }
  }
  return dir;
}

}  // namespace

std::string CheckRuleName(CheckRule rule) {
  switch (rule) {
    case CheckRule::kAbsolute: return "absolute";
    case CheckRule::kRelative: return "relative";
    case CheckRule::kAtMost: return "at_most";
    case CheckRule::kAtLeast: return "at_least";
    case CheckRule::kFlag: return "flag";
  }
  return "absolute";
}

bool ScenarioCheck::Passes() const {
  if (!std::isfinite(observed)) return false;
  switch (rule) {
    case CheckRule::kAbsolute: return std::abs(observed - expected) <= tolerance;
    case CheckRule::kRelative:
      return std::abs(observed - expected) <= tolerance * std::abs(expected);
    case CheckRule::kAtMost: return observed <= expected + tolerance;
    case CheckRule::kAtLeast: return observed >= expected - tolerance;
    case CheckRule::kFlag: return observed == expected;
  }
  return false;
}

bool ScenarioReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ScenarioCheck& c) { return c.Passes(); });
}

const ScenarioCheck* ScenarioReport::Find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

UnboundednessSummary SummarizeUnboundedness(const UnboundednessFunction& f) {
  UnboundednessSummary s;
  const auto& terms = f.terms();
  const auto& pts = f.points();
  for (int n = 1; n <= static_cast<int>(terms.size()); ++n) {
    UnboundednessSummary::Row row;
    row.n = n;
    row.r = terms[n - 1].r;
    row.cap = terms[n - 1].cap;
    row.min_re_at_radius = std::numeric_limits<double>::infinity();
    row.min_re_on_set = std::numeric_limits<double>::infinity();
    for (const BallPoint& p : pts) {
      row.min_re_at_radius = std::min(row.min_re_at_radius, f.PartialSum(n, p.Scaled(row.r)).real());
      row.min_re_on_set = std::min(row.min_re_on_set, f.PartialSum(n, p).real());
    }
    row.norm = std::sqrt(std::max(0.0, f.PartialSumNormSquared(n)));
    row.budget = f.NormBudget(n);
    row.antipodal = std::abs(f.PartialSum(n, pts[0].Rotated(-1.0).Scaled(row.r)));
    s.rows.push_back(row);
  }
  return s;
}

ScenarioReport ScenarioHardyArc(const RunConfig& config) {
  const auto start = Clock::now();
  const Tolerances& tol = config.tolerances;
  ScenarioReport rep;
  rep.id = "hardy_arc";
  const KernelSpec spec = KernelSpec::HardyPoisson(1);
  SweepOptions sweep = MakeSweep(config);
  if (sweep.resolutions.empty()) sweep.resolutions = {65, 129, 257, 513};
  rep.inputs = {{"kernel", spec.Name()},
                {"set", "arc"},
                {"schedule", "1 - 2^-k, k = " + std::to_string(config.schedule.k_min) + ".." +
                                 std::to_string(config.schedule.k_max)},
                {"resolutions", Join(sweep.resolutions)}};
  for (double length : {0.125, 0.25, 0.5}) {
    const auto arc_start = Clock::now();
    const SetDescription arc =
        SetDescription::Arc({1.0}, 0.0, kTwoPi * length, sweep.resolutions.back());
    CapacityEstimate est = CapacitySweep(spec, arc, sweep);
    const double secs = Seconds(arc_start);
    const std::string tag = "arc_" + Str(length);
    Add(rep, tag + "_cap", est.extrapolated_cap, length, tol.hardy_length_relative,
        CheckRule::kRelative, "cited");
    Add(rep, tag + "_seconds", secs, 60.0, 0.0, CheckRule::kAtMost, "cited");
    // Weights at the finest resolution and the outermost radius, where the
    // edge layer of width ~ (1 - r) fits inside the edge atoms.
    const int outer = static_cast<int>(est.r_grid.size()) - 1;
    const CapacityCell& cell = est.cell(outer, static_cast<int>(est.resolutions.size()) - 1);
    if (cell.result) {
      Add(rep, tag + "_interior_nonuniformity", InteriorNonUniformity(cell.result->weights, 1),
          0.0, tol.hardy_uniform_relative, CheckRule::kAtMost, "cited");
    } else {
      AddFlag(rep, tag + "_outer_cell_solved", false, "direct");
    }
    if (est.last_resolved >= 0) {
      const CapacityCell& resolved =
          est.cell(est.last_resolved, static_cast<int>(est.resolutions.size()) - 1);
      std::string layer;
      if (resolved.result) {
        layer = ", interior nonuniformity there " +
                Str(InteriorNonUniformity(resolved.result->weights, 1));
      }
      rep.notes.push_back(tag + ": last resolved r = " + Str(est.r_grid[est.last_resolved]) +
                          ", cap = " + Str(est.last_resolved_cap) + layer);
    } else {
      AddFlag(rep, tag + "_resolved", false, "direct");
    }
    Track(rep, std::move(est));
  }
  // Full circle: orbit-reduced ladder, then a plain QP for the weights.
  {
    SweepOptions full = sweep;
    full.resolutions = {1 << 14, 1 << 15, 1 << 16, 1 << 17};
    CapacityEstimate est =
        CapacitySweep(spec, SetDescription::FlatCircle({1.0}, full.resolutions.back()), full);
    Add(rep, "full_circle_cap", est.extrapolated_cap, 1.0, tol.full_circle_absolute,
        CheckRule::kAbsolute, "oracle");
    Track(rep, std::move(est));
    const int m = 256;
    const EquilibriumResult eq =
        Solve(rep, spec, Discretize(SetDescription::FlatCircle({1.0}, m)), 0.9, TightSolver(config));
    Add(rep, "full_circle_weight_deviation", (eq.weights.array() * m - 1.0).abs().maxCoeff(), 0.0,
        tol.hardy_uniform_relative, CheckRule::kAtMost, "oracle");
  }
  rep.seconds = Seconds(start);
  return rep;
}

ScenarioReport ScenarioFlatVsTangentialCircle(const RunConfig& config) {
  const auto start = Clock::now();
  const Tolerances& tol = config.tolerances;
  ScenarioReport rep;
  rep.id = "flat_vs_tangential";
  const std::vector<double> schedule = MakeSchedule(config.schedule);
  const int m_fine = 1 << 17, m_coarse = 1 << 16;
  rep.inputs = {{"kernel", "drury-arveson d=2 (real and modulus variants)"},
                {"set", "flat-circle, tangential-circle base {1}"},
                {"orbit_orders", std::to_string(m_coarse) + "," + std::to_string(m_fine)},
                {"tangential_schedule", "1 - 2^-k, k = 1.." + std::to_string(tol.zero_k_max)}};
  const std::vector<Complex> e1 = {1.0, 0.0};
  const OrbitStructure fine = Orbits(SetDescription::FlatCircle(e1, m_fine));
  const OrbitStructure coarse = Orbits(SetDescription::FlatCircle(e1, m_coarse));

  // Re K energy of the uniform measure.
  const KernelSpec re_k = KernelSpec::DruryArveson(2);
  std::vector<double> re_values;
  for (double r : schedule) re_values.push_back(OrbitEnergyR(re_k, fine, {1.0}, r));
  const EnergyReport re_report = ClassifyEnergies(schedule, re_values);
  const double e_coarse = OrbitEnergyR(re_k, coarse, {1.0}, schedule.back());
  const double e_fine = re_values.back();
  // The orbit-order error is geometric (r^{2m}), so the finest order is the
  // extrapolated value; the coarse order bounds the remaining change.
  const double extrapolated = e_fine;
  rep.notes.push_back("Re K energy at the last radius: m=" + std::to_string(m_coarse) + " -> " +
                      Str(e_coarse) + ", m=" + std::to_string(m_fine) + " -> " + Str(e_fine));
  Add(rep, "flat_re_energy_limit", extrapolated, 1.0, tol.flat_energy_absolute,
      CheckRule::kAbsolute, "cited");
  AddFlag(rep, "flat_re_energy_converged",
          re_report.classification == EnergyClassification::kConverged, "cited");

  // |K| energy against the elliptic-integral oracle (2/pi) K(r^2).
  const KernelSpec mod_k = KernelSpec::DruryArveson(2, KernelVariant::kModulus);
  std::vector<double> mod_values;
  double worst = 0.0;
  for (double r : schedule) {
    const double e = OrbitEnergyR(mod_k, fine, {1.0}, r);
    mod_values.push_back(e);
    const double oracle = 2.0 / std::numbers::pi * std::comp_ellint_1(r * r);
    worst = std::max(worst, std::abs(e - oracle) / oracle);
  }
  Add(rep, "flat_modulus_energy_vs_integral", worst, 0.0, tol.modulus_energy_relative,
      CheckRule::kAtMost, "cited");
  const GrowthFit fit = FitGrowth(GrowthLaw::kLogOneMinusR2, schedule, mod_values);
  Add(rep, "flat_modulus_log_fit_r_squared", fit.r_squared, tol.log_fit_r_squared, 0.0,
      CheckRule::kAtLeast, "cited");
  rep.notes.push_back("|K| energy fit: " + Str(fit.intercept) + " + " + Str(fit.slope) +
                      " log(1/(1-r^2))");
  const EnergyReport mod_report = ClassifyEnergies(schedule, mod_values);
  AddFlag(rep, "flat_modulus_energy_diverges",
          mod_report.classification == EnergyClassification::kDiverging, "cited");

  // Tangential circle.
  SweepOptions sweep = MakeSweep(config);
  sweep.schedule = Dyadic(1, tol.zero_k_max);
  sweep.resolutions = {1 << 13, 1 << 14, 1 << 15, 1 << 16};
  CapacityEstimate tan =
      CapacitySweep(re_k, SetDescription::TangentialCircle({0.0}, sweep.resolutions.back()), sweep);
  AddFlag(rep, "tangential_classified_zero", tan.classification == CapacityClassification::kZero,
          "cited");
  const double last_cap = tan.last_resolved >= 0 ? tan.last_resolved_cap : tan.cap_finest.back();
  Add(rep, "tangential_last_cap", last_cap, tol.zero_threshold, 0.0, CheckRule::kAtMost, "cited");
  bool decreasing = tan.last_resolved >= tol.zero_window - 1;
  for (int i = tan.last_resolved - tol.zero_window + 2; decreasing && i <= tan.last_resolved; ++i) {
    decreasing = tan.cap_finest[i] < tan.cap_finest[i - 1];
  }
  AddFlag(rep, "tangential_decreasing_tail", decreasing, "cited");
  double worst_closed = 0.0;
  for (int i = 0; i <= tan.last_resolved; ++i) {
    const double r = tan.r_grid[i];
    const double exact = std::sqrt((1.0 - r * r) * (1.0 + r * r));
    worst_closed = std::max(worst_closed, std::abs(tan.cap_finest[i] - exact) / exact);
  }
  Add(rep, "tangential_vs_closed_form", worst_closed, 0.0, tol.resolved_relative,
      CheckRule::kAtMost, "closed-form");
  Track(rep, std::move(tan));

  if (config.WantsCsv() || config.WantsJson()) {
    const std::string dir = EffectiveOutputDir(config) + "/scenarios/" + rep.id;
    EnsureDirectory(dir);
    if (config.WantsCsv()) {
      WriteEnergyCsv(re_report, dir + "/energy_re.csv");
      WriteEnergyCsv(mod_report, dir + "/energy_modulus.csv");
      rep.artifacts.push_back(dir + "/energy_re.csv");
      rep.artifacts.push_back(dir + "/energy_modulus.csv");
    }
    if (config.WantsJson()) {
      WriteTextFile(dir + "/energy_re.json", EnergyReportJson(re_report, re_k.Name(), "flat-circle"));
      WriteTextFile(dir + "/energy_modulus.json",
                    EnergyReportJson(mod_report, mod_k.Name(), "flat-circle"));
      rep.artifacts.push_back(dir + "/energy_re.json");
      rep.artifacts.push_back(dir + "/energy_modulus.json");
    }
  }
  rep.seconds = Seconds(start);
  return rep;
}

ScenarioReport ScenarioPushforwardIdentity(const RunConfig& config) {
  const auto start = Clock::now();
  const Tolerances& tol = config.tolerances;
  ScenarioReport rep;
  rep.id = "pushforward_identity";
  const KernelSpec h2 = KernelSpec::DruryArveson(2);
  const KernelSpec d_half = KernelSpec::WeightedDirichlet(1, 0.5);
  SweepOptions lift = MakeSweep(config);
  lift.schedule = Dyadic(1, 12);
  lift.resolutions = {65, 129, 257};
  SweepOptions base = lift;
  base.schedule.clear();
  for (double r : lift.schedule) base.schedule.push_back(r * r);
  rep.inputs = {{"lift_kernel", h2.Name()},
                {"base_kernel", d_half.Name()},
                {"lift_schedule", "1 - 2^-k, k = 1..12"},
                {"base_schedule", "squares of the lift schedule"},
                {"resolutions", Join(lift.resolutions)}};
  auto compare = [&](const std::string& tag, const SetDescription& lifted,
                     const SetDescription& flat, const SweepOptions& lift_options,
                     const SweepOptions& base_options) {
    CapacityEstimate a = CapacitySweep(h2, lifted, lift_options);
    CapacityEstimate b = CapacitySweep(d_half, flat, base_options);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
      if (!a.cells[i].result || !b.cells[i].result) continue;
      const double ca = a.cells[i].result->cap_r, cb = b.cells[i].result->cap_r;
      worst = std::max(worst, std::abs(ca - cb) / cb);
    }
    Add(rep, tag + "_matched_cells", worst, 0.0, tol.pushforward_relative, CheckRule::kAtMost,
        "cited");
    Add(rep, tag + "_extrapolated", a.extrapolated_cap, b.extrapolated_cap,
        tol.pushforward_relative, CheckRule::kRelative, "cited");
    const bool both_zero = a.classification == CapacityClassification::kZero &&
                           b.classification == CapacityClassification::kZero;
    rep.notes.push_back(tag + ": lift " + Str(a.extrapolated_cap) + " (" +
                        ClassificationName(a.classification) + "), base " +
                        Str(b.extrapolated_cap) + " (" + ClassificationName(b.classification) +
                        ")");
    Track(rep, std::move(a));
    Track(rep, std::move(b));
    return both_zero;
  };
  for (double length : {0.125, 0.25, 0.5}) {
    const double t1 = kTwoPi * length;
    compare("arc_" + Str(length), SetDescription::ProductLift(0.0, t1, 257, 64),
            SetDescription::Arc({1.0}, 0.0, t1, 257), lift, base);
  }
  {
    // Full base circle: 256 equispaced base angles on both sides.
    SweepOptions lf = lift;
    lf.schedule = Dyadic(1, 6);
    lf.resolutions = {256};
    SweepOptions bf = lf;
    bf.schedule.clear();
    for (double r : lf.schedule) bf.schedule.push_back(r * r);
    compare("full_circle", SetDescription::ProductLift(0.0, kTwoPi * 255.0 / 256.0, 256, 64),
            SetDescription::FlatCircle({1.0}, 256), lf, bf);
  }
  {
    SweepOptions lf = lift, bf = base;
    lf.schedule = Dyadic(1, tol.zero_k_max);
    bf.schedule.clear();
    for (double r : lf.schedule) bf.schedule.push_back(r * r);
    lf.resolutions = {1 << 13, 1 << 14, 1 << 15, 1 << 16};
    bf.resolutions = {1};
    CapacityEstimate a = CapacitySweep(h2, SetDescription::TangentialCircle({0.0}, 1 << 16), lf);
    CapacityEstimate b = CapacitySweep(d_half, SetDescription::FinitePoints({BallPoint({1.0})}), bf);
    AddFlag(rep, "point_both_zero",
            a.classification == CapacityClassification::kZero &&
                b.classification == CapacityClassification::kZero,
            "cited");
    Track(rep, std::move(a));
    Track(rep, std::move(b));
  }
  rep.seconds = Seconds(start);
  return rep;
}

ScenarioReport ScenarioAbstractAxioms(const RunConfig& config) {
  const auto start = Clock::now();
  const Tolerances& tol = config.tolerances;
  ScenarioReport rep;
  rep.id = "abstract_axioms";
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> size(3, 12);
  std::uniform_real_distribution<double> radius(0.3, 0.95), unit(0.0, 1.0), coeff(-2.0, 2.0);
  const SimplexQpOptions solver = TightSolver(config);
  const int instances = config.trials.axiom_sets;
  rep.inputs = {{"instances_per_kernel", std::to_string(instances)},
                {"seed", std::to_string(config.seed)},
                {"set_sizes", "3..12 boundary points"},
                {"radii", "uniform in [0.3, 0.95]"}};
  auto random_measure = [&](int d, int n) {
    std::vector<BallPoint> atoms = RandomBoundarySet(d, n, rng);
    std::vector<double> w;
    for (int i = 0; i < n; ++i) w.push_back(unit(rng) + 0.05);
    return DiscreteMeasure(std::move(atoms), std::move(w));
  };
  for (const NamedKernel& nk : PositiveKernels()) {
    const KernelSpec& spec = nk.spec;
    const int d = spec.dimension();
    double a1 = 0.0, a2 = 0.0, a2_zero = 0.0, a3 = 0.0;
    double p1 = -std::numeric_limits<double>::infinity(), p2 = p1, p3 = p1, p3_limit = 0.0;
    for (int trial = 0; trial < instances; ++trial) {
      const double r = radius(rng);
      const DiscreteMeasure mu = random_measure(d, size(rng));
      const DiscreteMeasure nu = random_measure(d, size(rng));
      const DiscreteMeasure rho = random_measure(d, size(rng));
      // A1: symmetry.
      const Complex e_mn = MixedEnergyR(spec, mu, nu, r);
      const Complex e_nm = MixedEnergyR(spec, nu, mu, r);
      a1 = std::max(a1, std::abs(e_mn - std::conj(e_nm)) / std::max(1.0, std::abs(e_mn)));
      // A2: bilinearity in the first slot.
      const double s = coeff(rng), t = coeff(rng);
      const Complex lhs = MixedEnergyR(spec, mu.Scaled(std::abs(s)).Plus(rho.Scaled(std::abs(t))),
                                       nu, r);
      const Complex rhs = std::abs(s) * e_mn + std::abs(t) * MixedEnergyR(spec, rho, nu, r);
      a2 = std::max(a2, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      const Complex e_rn = MixedEnergyR(spec, rho, nu, r);
      a2_zero = std::max(a2_zero, std::abs(MixedEnergyR(spec, rho.Plus(mu.Scaled(0.0)), nu, r) -
                                           e_rn));
      // A3 proxy: weights converging to those of mu.
      {
        std::vector<double> w = mu.weights();
        std::vector<double> drift(w.size());
        for (double& x : drift) x = unit(rng);
        const double limit = EnergyR(spec, mu, r);
        double tail_min = std::numeric_limits<double>::infinity();
        for (int k = 20; k <= 40; ++k) {
          std::vector<double> wk = w;
          for (std::size_t i = 0; i < wk.size(); ++i) wk[i] += std::ldexp(drift[i], -k);
          tail_min = std::min(tail_min, EnergyR(spec, DiscreteMeasure(mu.atoms(), wk), r));
        }
        a3 = std::max(a3, (limit - tail_min) / std::max(1.0, limit));
      }
      // P1: monotone under inclusion.
      const std::vector<BallPoint> f = mu.atoms();
      std::vector<BallPoint> g = f;
      for (const auto& p : nu.atoms()) g.push_back(p);
      const double cap_f = CapOf(rep, spec, f, r, solver);
      const double cap_g = CapOf(rep, spec, g, r, solver);
      p1 = std::max(p1, cap_f - cap_g);
      // P2: subadditivity on F u H.
      const std::vector<BallPoint>& h = nu.atoms();
      const double cap_h = CapOf(rep, spec, h, r, solver);
      p2 = std::max(p2, cap_g - cap_f - cap_h);
      // P3: decreasing sequence F_n = F without its first n atoms, and the
      // intersection recomputed directly.
      double previous = cap_g;
      for (std::size_t n = 1; n < g.size(); ++n) {
        const std::vector<BallPoint> fn(g.begin() + n, g.end());
        const double c = CapOf(rep, spec, fn, r, solver);
        p3 = std::max(p3, c - previous);
        previous = c;
      }
      const std::vector<BallPoint> last = {g.back()};
      p3_limit = std::max(p3_limit, std::abs(CapOf(rep, spec, last, r, solver) - previous));
    }
    const double slack = tol.monotonicity_slack;
    Add(rep, nk.label + "_A1_symmetry", a1, 0.0, tol.axiom_absolute, CheckRule::kAtMost, "direct");
    Add(rep, nk.label + "_A2_bilinearity", a2, 0.0, tol.axiom_absolute, CheckRule::kAtMost,
        "direct");
    Add(rep, nk.label + "_A2_zero_coefficient", a2_zero, 0.0, 0.0, CheckRule::kAbsolute, "direct");
    Add(rep, nk.label + "_A3_lower_semicontinuity", a3, 0.0, tol.axiom_absolute,
        CheckRule::kAtMost, "direct");
    Add(rep, nk.label + "_P1_monotone", p1, 0.0, slack, CheckRule::kAtMost, "direct");
    Add(rep, nk.label + "_P2_subadditive", p2, 0.0, slack, CheckRule::kAtMost, "direct");
    Add(rep, nk.label + "_P3_decreasing", p3, 0.0, slack, CheckRule::kAtMost, "direct");
    Add(rep, nk.label + "_P3_limit_identity", p3_limit, 0.0, slack, CheckRule::kAtMost, "direct");
  }
  // P6 on an arc equilibrium.
  {
    const KernelSpec spec = KernelSpec::HardyPoisson(1);
    const EquilibriumResult eq =
        Solve(rep, spec, Discretize(SetDescription::Arc({1.0}, 0.0, kTwoPi * 0.25, 65)), 0.99,
              MakeSolver(config.solver));
    Add(rep, "P6_arc_variational_residual", eq.variational_residual, 0.0, tol.variational_floor,
        CheckRule::kAtLeast, "cited");
  }
  // Single atom for h^2_d: cap_r = (1 - r^2) / (1 + r^2).
  {
    const KernelSpec h2 = KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic);
    double worst = 0.0;
    for (double r : {0.5, 0.9, 0.99}) {
      const double cap = CapOf(rep, h2, {BallPoint::Basis(2, 0)}, r, MakeSolver(config.solver));
      const double oracle = 1.0 / h2.RealAt(Complex(r * r, 0.0));
      worst = std::max(worst, std::abs(cap - oracle));
      worst = std::max(worst, std::abs(oracle - (1.0 - r * r) / (1.0 + r * r)));
    }
    Add(rep, "single_atom_closed_form", worst, 0.0, tol.single_atom_absolute, CheckRule::kAtMost,
        "closed-form");
  }
  // Direct double sum against the moment series.
  {
    const std::vector<KernelSpec> series_kernels = {
        KernelSpec::DruryArveson(1), KernelSpec::DruryArveson(2),
        KernelSpec::DruryArveson(3), KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic),
        KernelSpec::DirichletLog(2), KernelSpec::WeightedDirichlet(3, 0.5),
        KernelSpec::HardyPoisson(1), KernelSpec::Bounded(3, 0.5)};
    std::uniform_real_distribution<double> series_radius(0.2, 0.75);
    std::uniform_int_distribution<int> atoms(1, 8);
    double worst = 0.0;
    const int count = config.trials.series_measures;
    for (int trial = 0; trial < count; ++trial) {
      const KernelSpec& spec = series_kernels[trial % series_kernels.size()];
      const int d = spec.dimension();
      const int n = atoms(rng);
      std::vector<BallPoint> pts;
      std::vector<double> w;
      for (int i = 0; i < n; ++i) {
        pts.push_back(unit(rng) < 0.5 ? RandomSpherePoint(d, rng) : RandomBallPoint(d, rng, 1.0));
        w.push_back(unit(rng));
      }
      const DiscreteMeasure mu(std::move(pts), std::move(w));
      const double r = series_radius(rng);
      const double direct = EnergyR(spec, mu, r);
      int degree = 8;
      while (EnergySeriesTail(spec, mu.total_mass(), r, degree) > 1e-11 * std::max(1.0, direct)) {
        degree += 8;
      }
      const SeriesEnergy series = EnergySeries(spec, mu, r, degree);
      worst = std::max(worst, std::abs(direct - series.value) / std::max(1.0, std::abs(direct)));
    }
    Add(rep, "energy_series_agreement", worst, 0.0, tol.series_relative, CheckRule::kAtMost,
        "oracle");
  }
  Add(rep, "min_variational_residual", rep.min_variational_residual, 0.0, tol.variational_floor,
      CheckRule::kAtLeast, "cited");
  rep.seconds = Seconds(start);
  return rep;
}

ScenarioReport ScenarioDualAndChoquet(const RunConfig& config) {
  const auto start = Clock::now();
  const Tolerances& tol = config.tolerances;
  ScenarioReport rep;
  rep.id = "dual_and_choquet";
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> size(5, 40);
  std::uniform_real_distribution<double> radius(0.5, 0.99);
  const SimplexQpOptions solver = MakeSolver(config.solver);
  const SimplexQpOptions tight = TightSolver(config);
  rep.inputs = {{"sets_per_kernel", std::to_string(config.trials.dual_sets)},
                {"seed", std::to_string(config.seed)},
                {"set_sizes", "5..40 boundary points"},
                {"radii", "uniform in [0.5, 0.99]"}};
  for (const NamedKernel& nk : PositiveKernels()) {
    const int d = nk.spec.dimension();
    double worst_product = 0.0, worst_nnqp = 0.0, monotone = 0.0, decreasing = 0.0,
           increasing = 0.0, union_limit = 0.0;
    for (int trial = 0; trial < config.trials.dual_sets; ++trial) {
      const double r = radius(rng);
      const std::vector<BallPoint> pts = RandomBoundarySet(d, size(rng), rng);
      const GramianProblem problem = GramianProblem::Build(nk.spec, pts, r);
      const DualResult dual = SolveDual(problem, solver);
      const EquilibriumResult eq = SolveEquilibrium(problem, solver);
      Track(rep, eq);
      worst_product = std::max(worst_product, std::abs(dual.duality_product - 1.0));
      if (dual.nonnegative_qp_value) {
        worst_nnqp = std::max(worst_nnqp,
                              std::abs(*dual.nonnegative_qp_value + 0.5 * eq.cap_r) / eq.cap_r);
      }
      // (b) monotone and (c)/(d) along nested prefixes F_1 c F_2 c ... c F.
      double previous = 0.0;
      for (std::size_t n = 1; n <= pts.size(); n += std::max<std::size_t>(1, pts.size() / 6)) {
        const std::vector<BallPoint> prefix(pts.begin(), pts.begin() + n);
        const double c = CapOf(rep, nk.spec, prefix, r, tight);
        increasing = std::max(increasing, previous - c);
        previous = c;
      }
      const double full = CapOf(rep, nk.spec, pts, r, tight);
      increasing = std::max(increasing, previous - full);
      union_limit = std::max(union_limit, std::abs(full - eq.cap_r) / full);
      monotone = std::max(monotone, previous - full);
      double down = full;
      for (std::size_t n = 1; n < pts.size(); n += std::max<std::size_t>(1, pts.size() / 6)) {
        const std::vector<BallPoint> suffix(pts.begin() + n, pts.end());
        const double c = CapOf(rep, nk.spec, suffix, r, tight);
        decreasing = std::max(decreasing, c - down);
        down = c;
      }
    }
    const double slack = tol.monotonicity_slack;
    Add(rep, nk.label + "_duality_product", worst_product, 0.0, tol.duality_relative,
        CheckRule::kAtMost, "oracle");
    Add(rep, nk.label + "_nonnegative_qp_route", worst_nnqp, 0.0, 1e3 * tol.duality_relative,
        CheckRule::kAtMost, "oracle");
    Add(rep, nk.label + "_choquet_b_monotone", monotone, 0.0, slack, CheckRule::kAtMost, "direct");
    Add(rep, nk.label + "_choquet_c_decreasing", decreasing, 0.0, slack, CheckRule::kAtMost,
        "direct");
    Add(rep, nk.label + "_choquet_d_increasing", increasing, 0.0, slack, CheckRule::kAtMost,
        "direct");
    Add(rep, nk.label + "_choquet_d_union_limit", union_limit, 0.0, 1e-8, CheckRule::kAtMost,
        "direct");
  }
  // (a) empty set.
  {
    SweepOptions sweep = MakeSweep(config);
    sweep.schedule = {0.5, 0.9};
    CapacityEstimate empty =
        CapacitySweep(KernelSpec::DruryArveson(2), SetDescription::FinitePoints({}), sweep);
    Add(rep, "choquet_a_empty_set", empty.extrapolated_cap, 0.0, 0.0,
        CheckRule::kAbsolute, "cited");
    AddFlag(rep, "choquet_a_empty_degenerate", empty.degenerate, "cited");
  }
  // Outer capacity of a finite set through shrinking open neighbourhoods,
  // each sampled by the set plus nearby points.
  {
    const KernelSpec spec = KernelSpec::DruryArveson(2);
    const double r = 0.9;
    const std::vector<BallPoint> f = RandomBoundarySet(2, 3, rng);
    const double cap_f = CapOf(rep, spec, f, r, tight);
    std::vector<std::vector<Complex>> offsets;
    for (int j = 0; j < 6; ++j) offsets.push_back(RandomSpherePoint(2, rng).coordinates());
    double above = 0.0, last_gap = 0.0, previous_gap = std::numeric_limits<double>::infinity();
    bool shrinking = true;
    for (int k = 4; k <= 28; k += 4) {
      const double eps = std::ldexp(1.0, -k);
      std::vector<BallPoint> nbhd = f;
      for (const BallPoint& p : f) {
        for (const auto& u : offsets) {
          std::vector<Complex> z = p.coordinates();
          for (int i = 0; i < 2; ++i) z[i] += eps * u[i];
          nbhd.push_back(BallPoint::Normalized(std::move(z)));
        }
      }
      // Near-duplicate atoms make the Gramian singular; use the certified
      // upper bound 1 / min_i (G lambda)_i instead of 1 / energy.
      const EquilibriumResult eq = Solve(rep, spec, nbhd, r, solver);
      const double cap_n = eq.cap_r;
      above = std::max(above, cap_f - 1.0 / (eq.energy + eq.variational_residual));
      last_gap = cap_n - cap_f;
      shrinking = shrinking && last_gap <= previous_gap + tol.monotonicity_slack;
      previous_gap = last_gap;
    }
    Add(rep, "outer_capacity_contains", above, 0.0, tol.monotonicity_slack, CheckRule::kAtMost,
        "direct");
    Add(rep, "outer_capacity_limit", last_gap / cap_f, 0.0, 1e-6, CheckRule::kAtMost, "direct");
    AddFlag(rep, "outer_capacity_shrinking", shrinking, "direct");
  }
  Add(rep, "min_variational_residual", rep.min_variational_residual, 0.0, tol.variational_floor,
      CheckRule::kAtLeast, "cited");
  rep.seconds = Seconds(start);
  return rep;
}

ScenarioReport ScenarioUnboundedness(const RunConfig& config) {
  const auto start = Clock::now();
  const Tolerances& tol = config.tolerances;
  ScenarioReport rep;
  rep.id = "unboundedness";
  const KernelSpec spec = KernelSpec::DruryArveson(2, KernelVariant::kHolomorphic);
  const int n_terms = config.unbounded.terms;
  std::vector<double> radii;
  for (int n = 1; n <= n_terms; ++n) radii.push_back(1.0 - std::pow(config.unbounded.base, -n));
  rep.inputs = {{"kernel", spec.Name()},
                {"radii", "r_n = 1 - " + Str(config.unbounded.base) + "^-n, n = 1.." +
                              std::to_string(n_terms)},
                {"tangential_resolution", std::to_string(config.unbounded.resolution)}};
  UnboundednessOptions options;
  options.solver = TightSolver(config);
  const std::string dir = EffectiveOutputDir(config) + "/scenarios/" + rep.id;
  struct Case {
    std::string tag;
    SetDescription set;
  };
  const std::vector<Case> cases = {
      {"point", SetDescription::FinitePoints({BallPoint::Basis(2, 0)})},
      {"tangential", SetDescription::TangentialCircle({0.0}, config.unbounded.resolution)}};
  for (const Case& c : cases) {
    SweepOptions sweep = MakeSweep(config);
    sweep.schedule = radii;
    sweep.resolutions = {c.set.resolution};
    CapacityEstimate est = CapacitySweep(spec, c.set, sweep);
    const CapacityClassification cls = est.classification;
    Track(rep, std::move(est));
    AddFlag(rep, c.tag + "_classified_zero", cls == CapacityClassification::kZero, "cited");
    if (cls != CapacityClassification::kZero) continue;
    const UnboundednessFunction f = BuildUnboundednessFunction(spec, c.set, cls, radii, options);
    for (const auto& t : f.terms()) Track(rep, t.equilibrium);
    const UnboundednessSummary summary = SummarizeUnboundedness(f);
    const auto& last = summary.rows.back();
    const double target = n_terms * (1.0 - tol.unbounded_relative);
    Add(rep, c.tag + "_re_at_last_radius", last.min_re_at_radius, target, 0.0, CheckRule::kAtLeast,
        "cited");
    Add(rep, c.tag + "_re_on_set", last.min_re_on_set, target, 0.0, CheckRule::kAtLeast, "cited");
    double worst_budget = -std::numeric_limits<double>::infinity();
    for (const auto& row : summary.rows) worst_budget = std::max(worst_budget, row.norm - row.budget);
    Add(rep, c.tag + "_norm_within_budget", worst_budget, 0.0, tol.norm_budget_slack,
        CheckRule::kAtMost, "cited");
    if (c.tag == "point") {
      double cap_sum = 0.0;
      for (const auto& t : f.terms()) cap_sum += t.cap;
      Add(rep, "point_antipodal_bounded", last.antipodal, cap_sum, 0.0, CheckRule::kAtMost,
          "closed-form");
    }
    rep.notes.push_back(c.tag + ": Re F_N(r_N p) = " + Str(last.min_re_at_radius) +
                        ", Re F_N(p) = " + Str(last.min_re_on_set) + ", ||F_N|| = " +
                        Str(last.norm) + ", budget = " + Str(last.budget));
    if (config.WantsCsv() || config.WantsJson()) {
      EnsureDirectory(dir);
      if (config.WantsCsv()) {
        WriteUnboundednessCsv(summary, dir + "/" + c.tag + ".csv");
        rep.artifacts.push_back(dir + "/" + c.tag + ".csv");
      }
      if (config.WantsJson()) {
        WriteTextFile(dir + "/" + c.tag + ".json",
                      UnboundednessJson(summary, spec.Name(), SetKindName(c.set.kind)));
        rep.artifacts.push_back(dir + "/" + c.tag + ".json");
      }
    }
  }
  rep.seconds = Seconds(start);
  return rep;
}

ScenarioReport ScenarioZeroSet(const RunConfig& config) {
  const auto start = Clock::now();
  const Tolerances& tol = config.tolerances;
  ScenarioReport rep;
  rep.id = "zero_set";
  const KernelSpec spec = KernelSpec::DruryArveson(2);
  SweepOptions sweep = MakeSweep(config);
  sweep.schedule = Dyadic(1, tol.zero_k_max);
  sweep.resolutions = {1 << 13, 1 << 14, 1 << 15, 1 << 16};
  rep.inputs = {{"kernel", spec.Name()},
                {"polynomials", "z2; 1 - 2*z1*z2; 1"},
                {"schedule", "1 - 2^-k, k = 1.." + std::to_string(tol.zero_k_max)},
                {"orbit_orders", Join(sweep.resolutions)}};
  const ZeroSetOptions zopt;
  {
    CapacityEstimate est =
        PolynomialZeroSetCapacity(spec, Polynomial::Parse("z2", 2), zopt, sweep);
    AddFlag(rep, "z2_positive", est.classification == CapacityClassification::kPositive, "cited");
    Add(rep, "z2_cap", est.extrapolated_cap, 1.0, tol.full_circle_absolute, CheckRule::kAbsolute,
        "oracle");
    Track(rep, std::move(est));
  }
  {
    CapacityEstimate est =
        PolynomialZeroSetCapacity(spec, Polynomial::Parse("1 - 2*z1*z2", 2), zopt, sweep);
    AddFlag(rep, "tangential_zero_set_zero", est.classification == CapacityClassification::kZero,
            "cited");
    Track(rep, std::move(est));
  }
  {
    CapacityEstimate est = PolynomialZeroSetCapacity(spec, Polynomial::Parse("1", 2), zopt, sweep);
    AddFlag(rep, "constant_degenerate", est.degenerate, "direct");
    Track(rep, std::move(est));
  }
  rep.seconds = Seconds(start);
  return rep;
}

std::vector<TestFunction> WeakTypeFunctions(const RunConfig& config,
                                            std::vector<EquilibriumResult>* solved) {
  const MaximalConfig& mc = config.maximal;
  const KernelSpec h2 = KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic);
  std::mt19937_64 rng(config.seed ^ 0x5851f42d4c957f2dULL);
  std::vector<TestFunction> functions;
  for (double rho : mc.kernel_radii) {
    functions.push_back(
        NormalizedKernel(h2, RandomSpherePoint(2, rng).Scaled(rho), "kernel_r" + Str(rho)));
  }
  for (double length : mc.potential_lengths) {
    const std::vector<BallPoint> pts =
        Discretize(SetDescription::Arc({1.0, 0.0}, 0.0, kTwoPi * length, mc.potential_resolution));
    const EquilibriumResult eq = SolveEquilibrium(GramianProblem::Build(h2, pts, mc.potential_radius),
                                                  MakeSolver(config.solver));
    if (solved) solved->push_back(eq);
    functions.push_back(
        EquilibriumPotential(h2, pts, eq, mc.potential_radius, "potential_arc" + Str(length)));
  }
  return functions;
}

ScenarioReport ScenarioWeakType(const RunConfig& config) {
  const auto start = Clock::now();
  const Tolerances& tol = config.tolerances;
  const MaximalConfig& mc = config.maximal;
  ScenarioReport rep;
  rep.id = "weak_type";
  const KernelSpec h2 = KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic);
  std::mt19937_64 rng(config.seed ^ 0x2545f4914f6cdd1dULL);
  std::ostringstream levels;
  for (const auto& [nu, nphi] : mc.grid_levels) levels << nu << "x" << nphi << "^2 ";
  rep.inputs = {{"kernel", h2.Name()},
                {"grid_levels", levels.str()},
                {"sampler", std::to_string(mc.radial) + " radial x " + std::to_string(mc.angular) +
                                " angular x " + std::to_string(mc.tangential) + " tangential"},
                {"kappa", Str(mc.kappa)},
                {"seed", std::to_string(config.seed)}};
  std::vector<EquilibriumResult> solved;
  const std::vector<TestFunction> functions = WeakTypeFunctions(config, &solved);
  for (const auto& eq : solved) Track(rep, eq);
  const WeakTypeOptions options = MakeWeakType(config);
  const WeakTypeReport report = WeakTypeExperiment(h2, functions, options);
  AddFlag(rep, "max_ratio_finite", std::isfinite(report.max_ratio), "direct");
  Add(rep, "refinement_growth", report.refinement_growth, tol.weak_type_growth, 0.0,
      CheckRule::kAtMost, "cited");
  rep.notes.push_back("empirical constant: max ratio cap t^2 / ||f||^2 = " + Str(report.max_ratio));
  for (std::size_t i = 0; i < report.level_max_ratio.size(); ++i) {
    rep.notes.push_back("grid level " + std::to_string(i) + " max ratio " +
                        Str(report.level_max_ratio[i]));
  }
  for (const auto& row : report.rows) {
    if (!row.error.empty()) rep.notes.push_back(row.function_id + ": " + row.error);
  }
  // f = 1 at t = 2 has an empty superlevel set.
  {
    WeakTypeOptions one = options;
    one.t_fractions.clear();
    one.absolute_t = {2.0};
    one.grid_levels = {{4, 4}};
    TestFunction constant{"constant", [](const BallPoint&) { return 1.0; }, 1.0};
    const WeakTypeReport r1 = WeakTypeExperiment(h2, {constant}, one);
    Add(rep, "constant_empty_superlevel_ratio", r1.max_ratio, 0.0, 0.0, CheckRule::kAbsolute,
        "direct");
  }
  // Koranyi geometry: triangle inequality and comparability constants.
  {
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < config.trials.triangle_draws; ++i) {
      const BallPoint a = RandomSpherePoint(2, rng), b = RandomSpherePoint(2, rng),
                      c = RandomSpherePoint(2, rng);
      worst = std::max(worst, TriangleResidual(a, b, c));
    }
    Add(rep, "koranyi_triangle_residual", worst, 0.0, 1e-12, CheckRule::kAtMost, "cited");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (double alpha : mc.alphas) {
      double max_distance = 0.0, min_kernel = std::numeric_limits<double>::infinity(),
             max_kernel = 0.0;
      RegionSampler sampler;
      sampler.radial = 24;
      sampler.angular = 8;
      sampler.tangential = 4;
      for (int i = 0; i < config.trials.comparability_draws;) {
        const BallPoint zeta = RandomSpherePoint(2, rng);
        const std::vector<BallPoint> region = RegionCandidates(zeta, alpha, sampler);
        const BallPoint& psi = region[static_cast<std::size_t>(unit(rng) * region.size()) %
                                      region.size()];
        if (!(psi.norm() < 1.0) || !RegionContains({zeta, alpha}, psi)) continue;
        const BallPoint w = RandomSpherePoint(2, rng).Scaled(psi.norm() * std::sqrt(unit(rng)));
        const ComparabilityRatios ratios = ComparabilityCheck(zeta, w, psi, alpha);
        max_distance = std::max(max_distance, ratios.distance_ratio);
        min_kernel = std::min(min_kernel, ratios.kernel_ratio);
        max_kernel = std::max(max_kernel, ratios.kernel_ratio);
        ++i;
      }
      AddFlag(rep, "comparability_finite_alpha" + Str(alpha),
              std::isfinite(max_distance) && std::isfinite(max_kernel) && min_kernel > 0.0,
              "cited");
      rep.notes.push_back("alpha " + Str(alpha) + ": C(alpha) >= " + Str(max_distance) +
                          ", kernel ratio band [" + Str(min_kernel) + ", " + Str(max_kernel) +
                          "]");
    }
  }
  if (config.WantsCsv() || config.WantsJson()) {
    const std::string dir = EffectiveOutputDir(config) + "/scenarios/" + rep.id;
    EnsureDirectory(dir);
    if (config.WantsCsv()) {
      WriteWeakTypeCsv(report, dir + "/maximal.csv");
      rep.artifacts.push_back(dir + "/maximal.csv");
    }
    if (config.WantsJson()) {
      WriteTextFile(dir + "/maximal.json", WeakTypeJson(report));
      rep.artifacts.push_back(dir + "/maximal.json");
    }
  }
  rep.seconds = Seconds(start);
  return rep;
}

std::vector<std::string> ScenarioIds() {
  return {"hardy_arc",       "flat_vs_tangential", "pushforward_identity", "abstract_axioms",
          "dual_and_choquet", "unboundedness",      "zero_set",             "weak_type"};
}

ScenarioReport RunScenario(const std::string& id, const RunConfig& config, bool write) {
  RunConfig local = config;
  if (!write) local.formats = {};
  ScenarioReport rep;
  if (id == "hardy_arc") {
    rep = ScenarioHardyArc(local);
  } else if (id == "flat_vs_tangential") {
    rep = ScenarioFlatVsTangentialCircle(local);
  } else if (id == "pushforward_identity") {
    rep = ScenarioPushforwardIdentity(local);
  } else if (id == "abstract_axioms") {
    rep = ScenarioAbstractAxioms(local);
  } else if (id == "dual_and_choquet") {
    rep = ScenarioDualAndChoquet(local);
  } else if (id == "unboundedness") {
    rep = ScenarioUnboundedness(local);
  } else if (id == "zero_set") {
    rep = ScenarioZeroSet(local);
  } else if (id == "weak_type") {
    rep = ScenarioWeakType(local);
  } else {
    throw ConfigError("scenario", "unknown scenario id '" + id + "'");
  }
  if (write) {
    const std::string dir = WriteArtifacts(rep, local);
    const std::string path = dir + "/report.json";
    rep.artifacts.push_back(path);
    WriteTextFile(path, ScenarioReportJson(rep));
  }
  return rep;
}

}  // namespace ballcap
