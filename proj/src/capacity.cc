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

#include "ballcap/capacity.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "ballcap/energy.h"
#include "ballcap/errors.h"
#include "ballcap/parallel.h"

namespace ballcap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

KernelSpec RealSpec(const KernelSpec& spec) {
  if (spec.variant() == KernelVariant::kHolomorphic) {
    // Energies of real measures only see Re K.
    return spec.WithVariant(KernelVariant::kRealPart);
  }
  return spec;
}

EquilibriumResult FromQp(const SimplexQpResult& qp) {
  EquilibriumResult e;
  e.weights = qp.weights;
  e.energy = qp.energy;
  e.cap_r = qp.energy > 0.0 ? 1.0 / qp.energy : std::numeric_limits<double>::infinity();
  e.fw_gap = qp.gap;
  e.variational_residual = qp.variational_residual;
  e.iterations = qp.iterations;
  e.stage = SolverStageName(qp.stage);
  e.converged = qp.converged;
  return e;
}

Eigen::VectorXd ExpandOrbitWeights(const Eigen::VectorXd& w, int order) {
  Eigen::VectorXd full(w.size() * order);
  for (Eigen::Index l = 0; l < w.size(); ++l) {
    full.segment(l * order, order).setConstant(w[l] / order);
  }
  return full;
}

int NextPowerOfTwo(double x) {
  int p = 1;
  while (p < x && p < (1 << 30)) p <<= 1;
  return p;
}

std::string CellLabel(double r, int m) {
  std::ostringstream out;
  out.precision(17);
  out << "(r=" << r << ", m=" << m << ")";
  return out.str();
}

}  // namespace

GramianProblem GramianProblem::Build(const KernelSpec& spec, std::vector<BallPoint> points,
                                     double r, int threads) {
  GramianProblem p;
  p.r = r;
  p.gramian = EvalRealGramian(RealSpec(spec), points, r, threads);
  p.points = std::move(points);
  return p;
}

Eigen::MatrixXd OrbitGramian(const KernelSpec& spec, const OrbitStructure& orbits,
                             double r, int threads) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
  const KernelSpec real = RealSpec(spec);
  const int d = spec.dimension();
  const std::size_t b = orbits.base.size();
  const int m = orbits.order;
  for (const BallPoint& p : orbits.base) {
    if (p.dimension() != d) throw DimensionMismatch("orbit base dimension mismatch");
  }
  std::vector<std::vector<Complex>> phase(m, std::vector<Complex>(d));
  for (int j = 0; j < m; ++j) {
    for (int c = 0; c < d; ++c) {
      phase[j][c] = std::conj(UnitRoot(static_cast<long>(orbits.frequencies[c]) * j, m));
    }
  }
  const double r2 = r * r;
  Eigen::MatrixXd g(b, b);
  ParallelFor(b, threads, [&](std::size_t k) {
    std::vector<Complex> prod(d);
    for (std::size_t l = 0; l <= k; ++l) {
      for (int c = 0; c < d; ++c) prod[c] = orbits.base[k][c] * std::conj(orbits.base[l][c]);
      double sum = 0.0;
      for (int j = 0; j < m; ++j) {
        Complex s = 0.0;
        for (int c = 0; c < d; ++c) s += prod[c] * phase[j][c];
        sum += real.RealAt(r2 * s);
      }
      g(k, l) = sum / m;
    }
  });
  for (std::size_t k = 0; k < b; ++k) {
    for (std::size_t l = k + 1; l < b; ++l) g(k, l) = g(l, k);
  }
  return g;
}

EquilibriumResult SolveEquilibrium(const GramianProblem& problem,
                                   const SimplexQpOptions& options) {
  return FromQp(MinimizeOnSimplex(problem.gramian, options));
}

EquilibriumResult SolveOrbitEquilibrium(const KernelSpec& spec,
                                        const OrbitStructure& orbits, double r,
                                        const SimplexQpOptions& options, int threads) {
  const Eigen::MatrixXd g = OrbitGramian(spec, orbits, r, threads);
  try {
    EquilibriumResult e = FromQp(MinimizeOnSimplex(g, options));
    e.weights = ExpandOrbitWeights(e.weights, orbits.order);
    return e;
  } catch (ConvergenceFailure& failure) {
    SimplexQpResult best = failure.best();
    best.weights = ExpandOrbitWeights(best.weights, orbits.order);
    throw ConvergenceFailure(failure.what(), best);
  }
}

DualResult DualFromEquilibrium(const Eigen::MatrixXd& gramian,
                               const EquilibriumResult& equilibrium) {
  DualResult d;
  const Eigen::VectorXd g_lambda = gramian * equilibrium.weights;
  const double min_g = g_lambda.minCoeff();
  if (!(min_g > 0.0)) {
    throw ConditioningError("equilibrium potential is not positive on the set");
  }
  d.coefficients = equilibrium.weights / min_g;
  const Eigen::VectorXd gc = gramian * d.coefficients;
  d.norm_sq = d.coefficients.dot(gc);
  d.min_re_on_F = gc.minCoeff();
  d.dual_value = d.norm_sq;
  d.primal_energy = equilibrium.weights.dot(g_lambda);
  d.duality_product = d.dual_value * d.primal_energy;
  return d;
}

DualResult SolveDual(const GramianProblem& problem, const SimplexQpOptions& options,
                     bool independent_route) {
  const EquilibriumResult eq = SolveEquilibrium(problem, options);
  DualResult d = DualFromEquilibrium(problem.gramian, eq);
  if (independent_route) {
    const NonnegativeQpResult nn = SolveNonnegativeQp(problem.gramian, 1e-10);
    d.nonnegative_qp_value = 0.5 * nn.x.dot(problem.gramian * nn.x) - nn.x.sum();
    d.nonnegative_qp_converged = nn.converged;
  }
  return d;
}

std::string ClassificationName(CapacityClassification c) {
  return c == CapacityClassification::kZero ? "zero" : "positive";
}

SetDescription AtResolution(const SetDescription& set, int m) {
  SetDescription s = set;
  switch (set.kind) {
    case SetKind::kFinitePoints:
      if (m < static_cast<int>(set.points.size())) s.points.resize(std::max(m, 0));
      s.resolution = static_cast<int>(s.points.size());
      break;
    case SetKind::kProductLift:
    default:
      s.resolution = m;
      break;
  }
  return s;
}

bool LadderIsNested(const SetDescription& set, const std::vector<int>& ladder) {
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    const int a = ladder[i - 1], b = ladder[i];
    switch (set.kind) {
      case SetKind::kFinitePoints:
        if (a > b) return false;
        break;
      case SetKind::kArc:
      case SetKind::kProductLift:
        if (a > 1 && (b - 1) % (a - 1) != 0) return false;
        if (a > b) return false;
        break;
      default:
        if (b % a != 0) return false;
        break;
    }
  }
  return true;
}

void Summarize(CapacityEstimate& est, const SweepOptions& options, bool nested) {
  const std::size_t nr = est.r_grid.size(), nm = est.resolutions.size();
  if (est.degenerate) {
    est.cap_finest.assign(nr, 0.0);
    est.resolved.assign(nr, true);
    est.last_resolved = static_cast<int>(nr) - 1;
    est.last_resolved_cap = 0.0;
    est.extrapolated_cap = 0.0;
    est.classification = CapacityClassification::kZero;
    est.decay_exponent = 0.0;
    return;
  }
  est.cap_finest.assign(nr, kNaN);
  est.resolved.assign(nr, false);
  auto cap_of = [&](std::size_t ri, std::size_t mi) {
    const CapacityCell& c = est.cell(static_cast<int>(ri), static_cast<int>(mi));
    return (c.result && c.error.empty()) ? c.result->cap_r : kNaN;
  };
  for (std::size_t ri = 0; ri < nr; ++ri) {
    const double fine = cap_of(ri, nm - 1);
    est.cap_finest[ri] = fine;
    if (std::isnan(fine)) continue;
    if (nm == 1) {
      est.resolved[ri] = true;
      continue;
    }
    const double coarse = cap_of(ri, nm - 2);
    est.resolved[ri] = !std::isnan(coarse) &&
                       std::abs(fine - coarse) <= options.resolved_tolerance * std::abs(fine);
  }
  est.last_resolved = -1;
  for (std::size_t ri = 0; ri < nr && est.resolved[ri]; ++ri) est.last_resolved = static_cast<int>(ri);
  est.notes.erase(std::remove_if(est.notes.begin(), est.notes.end(),
                                 [](const std::string& n) { return n.rfind("summary:", 0) == 0; }),
                  est.notes.end());
  if (est.last_resolved < 0) {
    est.last_resolved_cap = kNaN;
    est.extrapolated_cap = kNaN;
    est.notes.push_back("summary: no radius is resolved by the resolution ladder");
  } else {
    const int b = est.last_resolved;
    const double cb = est.cap_finest[b];
    est.last_resolved_cap = cb;
    est.extrapolated_cap = cb;
    if (b >= 1) {
      const double ca = est.cap_finest[b - 1];
      const double ha = 1.0 - est.r_grid[b - 1], hb = 1.0 - est.r_grid[b];
      const double richardson = (cb * ha - ca * hb) / (ha - hb);
      est.extrapolated_cap = std::clamp(richardson, 0.0, cb);
    }
    if (b + 1 < static_cast<int>(nr)) {
      est.notes.push_back("summary: radii beyond r=" + std::to_string(est.r_grid[b]) +
                          " are not resolved at the finest resolution");
    }
  }
  // Classification from the resolved prefix.
  est.classification = CapacityClassification::kPositive;
  est.decay_exponent = 0.0;
  const int w = options.zero_window;
  if (est.last_resolved + 1 >= w && w >= 2) {
    bool decreasing = true;
    const int start = est.last_resolved + 1 - w;
    for (int i = start + 1; i <= est.last_resolved; ++i) {
      if (!(est.cap_finest[i] < est.cap_finest[i - 1])) decreasing = false;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = start; i <= est.last_resolved; ++i) {
      const double x = std::log(1.0 - est.r_grid[i]);
      const double y = std::log(std::max(est.cap_finest[i], 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double den = w * sxx - sx * sx;
    est.decay_exponent = den != 0.0 ? (w * sxy - sx * sy) / den : 0.0;
    if (decreasing && est.last_resolved_cap < options.zero_threshold) {
      est.classification = CapacityClassification::kZero;
    }
  }
  // Monotonicity battery.
  MonotonicityReport& mono = est.monotonicity;
  mono = MonotonicityReport{};
  mono.resolution_nested = nested;
  for (std::size_t mi = 0; mi < nm; ++mi) {
    for (std::size_t ri = 1; ri < nr; ++ri) {
      const CapacityCell& a = est.cell(static_cast<int>(ri - 1), static_cast<int>(mi));
      const CapacityCell& c = est.cell(static_cast<int>(ri), static_cast<int>(mi));
      if (a.atom_count != c.atom_count) continue;  // different discretizations
      const double diff = cap_of(ri, mi) - cap_of(ri - 1, mi);
      if (std::isnan(diff)) continue;
      mono.worst_r_violation = std::max(mono.worst_r_violation, diff);
      if (diff > options.monotonicity_slack) {
        mono.r_monotone = false;
        mono.violations.push_back("cap increases in r at " + CellLabel(c.r, c.resolution) +
                                  " by " + std::to_string(diff));
      }
    }
  }
  if (nested) {
    for (std::size_t ri = 0; ri < nr; ++ri) {
      for (std::size_t mi = 1; mi < nm; ++mi) {
        const CapacityCell& coarse = est.cell(static_cast<int>(ri), static_cast<int>(mi - 1));
        const CapacityCell& fine = est.cell(static_cast<int>(ri), static_cast<int>(mi));
        const double diff = cap_of(ri, mi - 1) - cap_of(ri, mi);
        if (std::isnan(diff)) continue;
        if (fine.atom_count % std::max(coarse.atom_count, 1) != 0 &&
            est.set != "points") {
          // Orbit orders that do not divide give non-nested sets.
          continue;
        }
        mono.worst_resolution_violation = std::max(mono.worst_resolution_violation, diff);
        if (diff > options.monotonicity_slack) {
          mono.resolution_monotone = false;
          mono.violations.push_back("cap decreases under refinement at " +
                                    CellLabel(fine.r, fine.resolution) + " by " +
                                    std::to_string(diff));
        }
      }
    }
  }
}

CapacityEstimate CapacitySweep(const KernelSpec& spec, const SetDescription& set,
                               const SweepOptions& options) {
  CapacityEstimate est;
  est.kernel = spec.Name();
  est.set = SetKindName(set.kind);
  est.r_grid = options.schedule.empty() ? DefaultSchedule() : options.schedule;
  est.resolutions = options.resolutions.empty() ? std::vector<int>{set.resolution}
                                                : options.resolutions;
  for (std::size_t i = 1; i < est.r_grid.size(); ++i) {
    if (!(est.r_grid[i] > est.r_grid[i - 1])) {
      throw DomainError("r schedule must be strictly increasing");
    }
  }
  for (std::size_t i = 1; i < est.resolutions.size(); ++i) {
    if (!(est.resolutions[i] > est.resolutions[i - 1])) {
      throw DomainError("resolution ladder must be strictly increasing");
    }
  }
  const bool orbit = options.use_orbits && HasOrbitStructure(set);
  const bool nested = LadderIsNested(set, est.resolutions);
  if (!nested) est.notes.push_back("resolution ladder is not nested");
  if (set.kind == SetKind::kFinitePoints && set.points.empty()) {
    est.degenerate = true;
    est.notes.push_back("empty set: capacity 0 by convention");
  }
  for (std::size_t ri = 0; ri < est.r_grid.size(); ++ri) {
    const double r = est.r_grid[ri];
    for (std::size_t mi = 0; mi < est.resolutions.size(); ++mi) {
      CapacityCell cell;
      cell.r_index = static_cast<int>(ri);
      cell.resolution_index = static_cast<int>(mi);
      cell.r = r;
      cell.resolution = est.resolutions[mi];
      if (est.degenerate) {
        est.cells.push_back(std::move(cell));
        continue;
      }
      try {
        SetDescription s = AtResolution(set, cell.resolution);
        if (orbit) {
          if (s.kind == SetKind::kProductLift) {
            const double need = options.orbit_factor / std::sqrt(1.0 - r * r);
            s.orbit_resolution = std::min(
                options.max_orbit_order, std::max(s.orbit_resolution, NextPowerOfTwo(need)));
          }
          const OrbitStructure o = Orbits(s);
          cell.atom_count = static_cast<int>(o.base.size()) * o.order;
          cell.result = SolveOrbitEquilibrium(spec, o, r, options.solver, options.threads);
        } else {
          std::vector<BallPoint> pts = Discretize(s);
          cell.atom_count = static_cast<int>(pts.size());
          cell.result = SolveEquilibrium(GramianProblem::Build(spec, std::move(pts), r,
                                                               options.threads),
                                         options.solver);
        }
      } catch (const ConvergenceFailure& failure) {
        cell.result = FromQp(failure.best());
        cell.error = std::string("convergence failure at ") + CellLabel(r, cell.resolution) +
                     ": " + failure.what();
      } catch (const Error& e) {
        cell.error = std::string("failure at ") + CellLabel(r, cell.resolution) + ": " +
                     e.what();
      }
      if (cell.result && !options.keep_weights) cell.result->weights.resize(0);
      est.cells.push_back(std::move(cell));
    }
  }
  Summarize(est, options, nested);
  return est;
}

UnboundednessFunction::UnboundednessFunction(KernelSpec spec, std::vector<BallPoint> points,
                                             std::vector<Term> terms)
    : spec_(std::move(spec)), points_(std::move(points)), terms_(std::move(terms)) {}

Complex UnboundednessFunction::TermAt(int n, const BallPoint& z) const {
  if (n < 1 || n > static_cast<int>(terms_.size())) {
    throw DomainError("term index out of range");
  }
  const Term& t = terms_[n - 1];
  const double r2 = t.r * t.r;
  Complex f = 0.0;
  for (std::size_t j = 0; j < points_.size(); ++j) {
    const double w = t.equilibrium.weights[j];
    if (w != 0.0) f += spec_.At(r2 * Inner(z, points_[j])).value * w;
  }
  return t.cap * f;
}

Complex UnboundednessFunction::PartialSum(int n_terms, const BallPoint& z) const {
  Complex s = 0.0;
  for (int n = 1; n <= n_terms; ++n) s += TermAt(n, z);
  return s;
}

double UnboundednessFunction::PartialSumNormSquared(int n_terms) const {
  // <f_n, f_m> = cap_n cap_m sum_ij l_i l_j k(r_n^2 r_m^2 <p_j, p_i>).
  const KernelSpec real = RealSpec(spec_);
  double total = 0.0;
  for (int n = 0; n < n_terms; ++n) {
    for (int m = 0; m <= n; ++m) {
      const double rho = terms_[n].r * terms_[n].r * terms_[m].r * terms_[m].r;
      const Eigen::VectorXd& a = terms_[n].equilibrium.weights;
      const Eigen::VectorXd& b = terms_[m].equilibrium.weights;
      double s = 0.0;
      for (std::size_t i = 0; i < points_.size(); ++i) {
        if (a[i] == 0.0) continue;
        double row = 0.0;
        for (std::size_t j = 0; j < points_.size(); ++j) {
          if (b[j] != 0.0) row += b[j] * real.RealAt(rho * Inner(points_[j], points_[i]));
        }
        s += a[i] * row;
      }
      const double term = terms_[n].cap * terms_[m].cap * s;
      total += n == m ? term : 2.0 * term;
    }
  }
  return total;
}

double UnboundednessFunction::NormBudget(int n_terms) const {
  double s = 0.0;
  for (int n = 0; n < n_terms; ++n) s += std::sqrt(terms_[n].cap);
  return s;
}

UnboundednessFunction BuildUnboundednessFunction(const KernelSpec& spec,
                                                 const SetDescription& set,
                                                 CapacityClassification classification,
                                                 const std::vector<double>& schedule,
                                                 const UnboundednessOptions& options) {
  if (classification == CapacityClassification::kPositive) {
    throw RefusalError("the set has positive capacity; no unboundedness function exists");
  }
  if (schedule.empty()) throw DomainError("unboundedness schedule is empty");
  const bool orbit = options.use_orbits && HasOrbitStructure(set);
  std::vector<BallPoint> points = Discretize(set);
  std::vector<UnboundednessFunction::Term> terms;
  const KernelSpec real = RealSpec(spec);
  for (double r : schedule) {
    UnboundednessFunction::Term t;
    t.r = r;
    if (orbit) {
      t.equilibrium = SolveOrbitEquilibrium(spec, Orbits(set), r, options.solver);
    } else {
      t.equilibrium = SolveEquilibrium(GramianProblem::Build(spec, points, r), options.solver);
    }
    t.cap = t.equilibrium.cap_r;
    terms.push_back(std::move(t));
  }
  // Ratio test on cap^{1/2} over the second half of the terms.
  if (terms.size() >= 2) {
    for (std::size_t n = std::max<std::size_t>(1, terms.size() / 2); n < terms.size(); ++n) {
      const double ratio = std::sqrt(terms[n].cap / terms[n - 1].cap);
      if (!(ratio < options.ratio_bound)) {
        throw RefusalError("square roots of the capacities do not look summable (ratio " +
                           std::to_string(ratio) + ")");
      }
    }
  }
  UnboundednessFunction f(spec, points, terms);
  // Norms and values on the set need the assembled function.
  std::vector<UnboundednessFunction::Term> filled = f.terms();
  for (std::size_t n = 0; n < filled.size(); ++n) {
    UnboundednessFunction single(spec, points, {filled[n]});
    filled[n].norm_sq = single.PartialSumNormSquared(1);
    double min_re = std::numeric_limits<double>::infinity();
    if (orbit) {
      // The potential is invariant under the orbit group; one atom per orbit.
      const OrbitStructure o = Orbits(set);
      for (const BallPoint& b : o.base) min_re = std::min(min_re, single.TermAt(1, b).real());
    } else {
      for (const BallPoint& p : points) min_re = std::min(min_re, single.TermAt(1, p).real());
    }
    filled[n].min_re_on_set = min_re;
  }
  return UnboundednessFunction(spec, std::move(points), std::move(filled));
}

namespace {

std::vector<BallPoint> SphereGrid(int d, int n) {
  std::vector<BallPoint> grid;
  if (d == 1) {
    for (int k = 0; k < n; ++k) grid.push_back(BallPoint({UnitRoot(k, n)}));
    return grid;
  }
  if (d != 2) throw DomainError("boundary zero-set search supports d <= 2");
  for (int j = 0; j < n; ++j) {
    const double u = (j + 0.5) / n;
    const double a = std::sqrt(u), b = std::sqrt(1.0 - u);
    for (int k1 = 0; k1 < n; ++k1) {
      for (int k2 = 0; k2 < n; ++k2) {
        grid.push_back(BallPoint({a * UnitRoot(k1, n), b * UnitRoot(k2, n)}));
      }
    }
  }
  return grid;
}

std::vector<Complex> Project(std::vector<Complex> z) {
  double n2 = 0.0;
  for (const Complex& c : z) n2 += std::norm(c);
  const double n = std::sqrt(n2);
  for (Complex& c : z) c /= n;
  return z;
}

bool Polish(const Polynomial& p, std::vector<Complex>& z, double threshold) {
  for (int it = 0; it < 200; ++it) {
    const Complex v = p.Evaluate(z);
    if (std::abs(v) <= 0.01 * threshold) return true;
    const std::vector<Complex> g = p.Gradient(z);
    double g2 = 0.0;
    for (const Complex& c : g) g2 += std::norm(c);
    if (g2 == 0.0) return false;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= v * std::conj(g[i]) / g2;
    z = Project(std::move(z));
  }
  return std::abs(p.Evaluate(z)) <= threshold;
}

double Distance(const BallPoint& a, const BallPoint& b) {
  double s = 0.0;
  for (int i = 0; i < a.dimension(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

// Diagonal circle actions t -> diag(e^{i f t}) under which the zero set of p
// restricted to the sampled points is invariant.
std::optional<std::pair<std::vector<int>, std::vector<BallPoint>>> DetectCircleAction(
    const Polynomial& p, const std::vector<BallPoint>& points, double threshold,
    double dedup) {
  const int d = p.dimension();
  std::vector<std::vector<int>> candidates;
  if (d == 1) {
    candidates = {{1}};
  } else {
    candidates = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {2, -1}};
  }
  for (const std::vector<int>& f : candidates) {
    // Pivot coordinate: |f_c| = 1 and nonzero at every point.
    int pivot = -1;
    for (int c = 0; c < d && pivot < 0; ++c) {
      if (std::abs(f[c]) != 1) continue;
      bool ok = true;
      for (const BallPoint& z : points) ok = ok && std::abs(z[c]) > 1e-6;
      if (ok) pivot = c;
    }
    if (pivot < 0) continue;
    bool invariant = true;
    for (const BallPoint& z : points) {
      for (int k = 0; k < 8 && invariant; ++k) {
        const double t = kTwoPi * (k + 0.37) / 8.0;
        std::vector<Complex> w = z.coordinates();
        for (int c = 0; c < d; ++c) w[c] *= std::polar(1.0, f[c] * t);
        invariant = std::abs(p.Evaluate(w)) <= 10.0 * threshold;
      }
      if (!invariant) break;
    }
    if (!invariant) continue;
    std::vector<BallPoint> reps;
    for (const BallPoint& z : points) {
      const double t = -std::arg(z[pivot]) / f[pivot];
      std::vector<Complex> w = z.coordinates();
      for (int c = 0; c < d; ++c) w[c] *= std::polar(1.0, f[c] * t);
      w[pivot] = std::abs(w[pivot]);
      BallPoint rep(Project(std::move(w)));
      bool seen = false;
      for (const BallPoint& q : reps) seen = seen || Distance(q, rep) < dedup;
      if (!seen) reps.push_back(rep);
    }
    return std::make_pair(f, reps);
  }
  return std::nullopt;
}

}  // namespace

ZeroSetSample SampleBoundaryZeroSet(const Polynomial& p, const ZeroSetOptions& options) {
  ZeroSetSample out;
  if (p.IsConstant()) {
    out.degenerate = p.terms().empty() || std::abs(p.Evaluate(std::vector<Complex>(
                                              p.dimension(), 0.0))) > options.threshold;
    if (!out.degenerate) throw DomainError("the zero polynomial vanishes everywhere");
    return out;
  }
  const int n = options.search_resolution;
  const std::vector<BallPoint> grid = SphereGrid(p.dimension(), n);
  double vmax = 0.0;
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = std::abs(p(grid[i]));
    vmax = std::max(vmax, values[i]);
  }
  // Coarse acceptance before polishing: within a band near the minimum.
  const double vmin = *std::min_element(values.begin(), values.end());
  const double band = vmin + 0.25 * (vmax - vmin) * (8.0 / n);
  for (std::size_t i = 0; i < grid.size() &&
                          static_cast<int>(out.points.size()) < options.max_points;
       ++i) {
    if (values[i] > band) continue;
    std::vector<Complex> z = grid[i].coordinates();
    if (!Polish(p, z, options.threshold)) continue;
    BallPoint q(Project(std::move(z)));
    const double residual = std::abs(p(q));
    if (residual > options.threshold) continue;
    bool seen = false;
    for (const BallPoint& s : out.points) seen = seen || Distance(s, q) < options.dedup_distance;
    if (seen) continue;
    out.max_residual = std::max(out.max_residual, residual);
    out.points.push_back(std::move(q));
  }
  out.degenerate = out.points.empty();
  return out;
}

CapacityEstimate PolynomialZeroSetCapacity(const KernelSpec& spec, const Polynomial& p,
                                           const ZeroSetOptions& zero_options,
                                           const SweepOptions& sweep_options) {
  if (p.dimension() != spec.dimension()) {
    throw DimensionMismatch("polynomial and kernel dimensions differ");
  }
  const ZeroSetSample sample = SampleBoundaryZeroSet(p, zero_options);
  if (sample.degenerate) {
    CapacityEstimate est;
    est.kernel = spec.Name();
    est.set = "zero-set";
    est.degenerate = true;
    est.classification = CapacityClassification::kZero;
    est.notes.push_back("degenerate set: no boundary zeros of " + p.ToString() +
                        " were found; capacity 0 by convention");
    return est;
  }
  SweepOptions opts = sweep_options;
  SetDescription set;
  const auto action = DetectCircleAction(p, sample.points, zero_options.threshold,
                                         zero_options.dedup_distance);
  std::string note;
  if (action) {
    set = SetDescription::OrbitUnion(action->second, action->first,
                                     opts.resolutions.empty() ? 1024 : opts.resolutions.back());
    std::ostringstream o;
    o << "zero set is a union of " << action->second.size()
      << " circle orbits with frequencies (";
    for (std::size_t c = 0; c < action->first.size(); ++c) {
      o << (c ? "," : "") << action->first[c];
    }
    o << ")";
    note = o.str();
  } else {
    set = SetDescription::FinitePoints(sample.points);
    if (opts.resolutions.empty()) {
      const int n = static_cast<int>(sample.points.size());
      opts.resolutions = {std::max(1, n / 4), std::max(1, n / 2), n};
      opts.resolutions.erase(std::unique(opts.resolutions.begin(), opts.resolutions.end()),
                             opts.resolutions.end());
    }
    note = "zero set sampled as " + std::to_string(sample.points.size()) + " points";
  }
  CapacityEstimate est = CapacitySweep(spec, set, opts);
  est.set = "zero-set";
  est.notes.insert(est.notes.begin(), note);
  std::ostringstream r;
  r << "max |p| on sampled points " << sample.max_residual;
  est.notes.insert(est.notes.begin() + 1, r.str());
  return est;
}

}  // namespace ballcap
