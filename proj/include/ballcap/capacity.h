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

#ifndef BALLCAP_CAPACITY_H_
#define BALLCAP_CAPACITY_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ballcap/kernels.h"
#include "ballcap/measures.h"
#include "ballcap/polynomial.h"
#include "ballcap/simplex_qp.h"

namespace ballcap {

// The r-capacity QP on a finite set: G[i][j] = k(r p_i, r p_j).
struct GramianProblem {
  Eigen::MatrixXd gramian;
  double r = 0.0;
  std::vector<BallPoint> points;

  static GramianProblem Build(const KernelSpec& spec, std::vector<BallPoint> points,
                              double r, int threads = 1);
};

// Gramian of orbit averages (1/m) sum_j k(r b_k, r U^j b_l); an
// orbit-invariant measure with orbit masses w has energy w' G w.
Eigen::MatrixXd OrbitGramian(const KernelSpec& spec, const OrbitStructure& orbits,
                             double r, int threads = 1);

struct EquilibriumResult {
  Eigen::VectorXd weights;  // on the atoms, in Discretize order
  double energy = 0.0;
  double cap_r = 0.0;
  double fw_gap = 0.0;
  double variational_residual = 0.0;
  long iterations = 0;
  std::string stage;
  bool converged = false;
};

EquilibriumResult SolveEquilibrium(const GramianProblem& problem,
                                   const SimplexQpOptions& options = {});
// Orbit-reduced solve; weights are expanded uniformly over each orbit.
EquilibriumResult SolveOrbitEquilibrium(const KernelSpec& spec,
                                        const OrbitStructure& orbits, double r,
                                        const SimplexQpOptions& options = {},
                                        int threads = 1);

// f = sum_j c_j k(., r p_j) rescaled so that min_i Re f(r p_i) = 1.
struct DualResult {
  Eigen::VectorXd coefficients;
  double norm_sq = 0.0;       // c'Gc
  double min_re_on_F = 0.0;   // min_i (Gc)_i
  double dual_value = 0.0;    // equals norm_sq
  double primal_energy = 0.0;
  double duality_product = 0.0;  // dual_value * primal_energy
  // Independent route: min 1/2 x'Gx - 1'x over x >= 0, whose value is -cap/2.
  std::optional<double> nonnegative_qp_value;
  bool nonnegative_qp_converged = false;
};
DualResult SolveDual(const GramianProblem& problem, const SimplexQpOptions& options = {},
                     bool independent_route = true);
DualResult DualFromEquilibrium(const Eigen::MatrixXd& gramian,
                               const EquilibriumResult& equilibrium);

enum class CapacityClassification { kPositive, kZero };
std::string ClassificationName(CapacityClassification c);

struct CapacityCell {
  int r_index = 0;
  int resolution_index = 0;
  double r = 0.0;
  int resolution = 0;   // ladder value
  int atom_count = 0;
  std::optional<EquilibriumResult> result;  // best iterate when not converged
  std::string error;                        // empty on success
};

struct MonotonicityReport {
  double worst_r_violation = 0.0;           // max cap(r_{k+1}) - cap(r_k)
  double worst_resolution_violation = 0.0;  // max cap(m) - cap(m')
  bool r_monotone = true;
  bool resolution_monotone = true;
  bool resolution_nested = true;  // whether the ladder is nested
  std::vector<std::string> violations;
};

struct CapacityEstimate {
  std::string kernel;
  std::string set;
  std::vector<double> r_grid;
  std::vector<int> resolutions;
  std::vector<CapacityCell> cells;  // r-major
  std::vector<double> cap_finest;   // finest resolution per radius, NaN on error
  std::vector<bool> resolved;       // finest two resolutions agree
  int last_resolved = -1;           // index into r_grid
  double last_resolved_cap = 0.0;
  double extrapolated_cap = 0.0;    // Richardson in (1 - r), clamped
  CapacityClassification classification = CapacityClassification::kPositive;
  double decay_exponent = 0.0;      // slope of log cap against log(1 - r)
  MonotonicityReport monotonicity;
  bool degenerate = false;          // empty set
  std::vector<std::string> notes;

  const CapacityCell& cell(int r_index, int resolution_index) const {
    return cells[r_index * resolutions.size() + resolution_index];
  }
};

struct SweepOptions {
  std::vector<double> schedule;   // defaults to 1 - 2^{-k}, k = 1..14
  std::vector<int> resolutions;   // defaults to the set's resolution
  SimplexQpOptions solver;
  bool use_orbits = true;
  double resolved_tolerance = 1e-3;
  double monotonicity_slack = 1e-10;
  double zero_threshold = 1e-3;
  int zero_window = 5;
  // For product lifts: orbit order at radius r is at least the next power
  // of two above orbit_factor / sqrt(1 - r^2), capped at max_orbit_order.
  double orbit_factor = 12.0;
  int max_orbit_order = 1 << 16;
  int threads = 1;
  bool keep_weights = true;
};

// The resolution parameter of the set that the ladder varies.
SetDescription AtResolution(const SetDescription& set, int m);
// Whether consecutive ladder entries give nested point sets.
bool LadderIsNested(const SetDescription& set, const std::vector<int>& ladder);

CapacityEstimate CapacitySweep(const KernelSpec& spec, const SetDescription& set,
                               const SweepOptions& options = {});

// Recomputes resolved flags, extrapolation, classification and
// monotonicity from the cells.
void Summarize(CapacityEstimate& estimate, const SweepOptions& options, bool nested);

// Partial sums F_N = sum_{n <= N} f_n of normalized equilibrium potentials
// f_n = cap_{r_n} sum_j K(r_n z, r_n p_j) lambda_j^{(n)}.
class UnboundednessFunction {
 public:
  struct Term {
    double r = 0.0;
    double cap = 0.0;
    double norm_sq = 0.0;  // ||f_n||^2 = cap^2 E_{r_n^2}(lambda)
    double min_re_on_set = 0.0;
    EquilibriumResult equilibrium;
  };

  UnboundednessFunction(KernelSpec spec, std::vector<BallPoint> points,
                        std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  const std::vector<BallPoint>& points() const { return points_; }
  // f_n(z) for 1-based n.
  Complex TermAt(int n, const BallPoint& z) const;
  Complex PartialSum(int n_terms, const BallPoint& z) const;
  // ||F_N||^2 from the mixed energies of the terms.
  double PartialSumNormSquared(int n_terms) const;
  // sum_{n <= N} cap_{r_n}^{1/2}
  double NormBudget(int n_terms) const;

 private:
  KernelSpec spec_;  // holomorphic variant
  std::vector<BallPoint> points_;
  std::vector<Term> terms_;
};

struct UnboundednessOptions {
  SimplexQpOptions solver;
  bool use_orbits = true;
  // Refuse when the summed square roots look divergent: the ratio of
  // consecutive cap^{1/2} must stay below this bound over the tail.
  double ratio_bound = 0.95;
};

// Refuses with RefusalError when `classification` is positive or when the
// computed square roots do not pass the ratio test.
UnboundednessFunction BuildUnboundednessFunction(const KernelSpec& spec,
                                                 const SetDescription& set,
                                                 CapacityClassification classification,
                                                 const std::vector<double>& schedule,
                                                 const UnboundednessOptions& options = {});

struct ZeroSetSample {
  std::vector<BallPoint> points;
  bool degenerate = false;
  double max_residual = 0.0;  // max |p| after polishing
};
struct ZeroSetOptions {
  int search_resolution = 64;  // per sphere coordinate
  double threshold = 1e-9;
  double dedup_distance = 1e-6;
  int max_points = 4096;
};
// Dense search over the sphere plus Newton polishing onto {p = 0}.
ZeroSetSample SampleBoundaryZeroSet(const Polynomial& p, const ZeroSetOptions& options = {});
CapacityEstimate PolynomialZeroSetCapacity(const KernelSpec& spec, const Polynomial& p,
                                           const ZeroSetOptions& zero_options,
                                           const SweepOptions& sweep_options);

}  // namespace ballcap

#endif  // BALLCAP_CAPACITY_H_
