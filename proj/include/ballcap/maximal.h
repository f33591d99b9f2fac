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

#ifndef BALLCAP_MAXIMAL_H_
#define BALLCAP_MAXIMAL_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ballcap/ball.h"
#include "ballcap/capacity.h"
#include "ballcap/kernels.h"

namespace ballcap {

// D_alpha(zeta) = {z : |1 - <z, zeta>| < (alpha / 2) (1 - |z|^2)}.
struct KoranyiRegion {
  BallPoint zeta;
  double alpha = 2.0;
};

// Strict inequality as stated; throws DomainError for |z| >= 1.
bool RegionContains(const KoranyiRegion& region, const BallPoint& z);

// |1 - <a, b>|^{1/2}
double KoranyiDistance(const BallPoint& a, const BallPoint& b);
// d(a, c) - d(a, b) - d(b, c)
double TriangleResidual(const BallPoint& a, const BallPoint& b, const BallPoint& c);

struct ComparabilityRatios {
  double kernel_ratio = 1.0;    // k(psi, w) / k(zeta, w) for the h^2_d kernel
  double distance_ratio = 1.0;  // |1 - <zeta, w>| / |1 - <psi, w>|
};
// Requires psi in D_alpha(zeta), |psi| >= |w| and |w| < 1.
ComparabilityRatios ComparabilityCheck(const BallPoint& zeta, const BallPoint& w,
                                       const BallPoint& psi, double alpha);

struct RegionSampler {
  int radial = 64;
  int angular = 32;
  int tangential = 8;
  double r_max = 0.999;
};

// Candidate points z = s (cos t zeta + sin t eta) for the widest aperture;
// callers filter by RegionContains for each alpha. Radial points (t = 0) are
// always present.
std::vector<BallPoint> RegionCandidates(const BallPoint& zeta, double alpha_max,
                                        const RegionSampler& sampler);

struct MaximalSample {
  BallPoint zeta;
  double alpha = 2.0;
  double sampled_sup = 0.0;
  int sample_size = 0;
  double r_max = 0.0;
};

using BallFunction = std::function<double(const BallPoint&)>;  // |f(z)|

// Sampled M_alpha f(zeta) for each alpha on one shared candidate grid.
std::vector<MaximalSample> SampledMaximal(const BallFunction& abs_f, const BallPoint& zeta,
                                          const std::vector<double>& alphas,
                                          const RegionSampler& sampler);

// Hopf-coordinate grid on dB_2: (sqrt(u) e^{i p1}, sqrt(1-u) e^{i p2}) with
// u_j = (j + 1/2) / n_u and p equispaced.
std::vector<BallPoint> SphereGrid2(int n_u, int n_phi);

// A test function with its norm in the h^2_d space.
struct TestFunction {
  std::string id;
  BallFunction abs_value;
  double norm_sq = 1.0;
};

// k(., w) / ||k(., w)|| for the h^2_d kernel.
TestFunction NormalizedKernel(const KernelSpec& h2, const BallPoint& w, std::string id);
// cap_r sum_j lambda_j k(r z, r p_j) with norm^2 = cap^2 E_{r^2}(lambda).
TestFunction EquilibriumPotential(const KernelSpec& h2, const std::vector<BallPoint>& points,
                                  const EquilibriumResult& eq, double r, std::string id);

struct WeakTypeRow {
  std::string function_id;
  double alpha = 0.0;
  int grid_level = 0;
  int grid_size = 0;
  double t = 0.0;
  int superlevel_size = 0;
  double capacity_r = 0.0;
  double cap_estimate = 0.0;
  double ratio = 0.0;  // cap t^2 / ||f||^2
  std::string error;
};

struct WeakTypeOptions {
  std::vector<double> alphas = {2.0, 4.0};
  std::vector<double> t_fractions = {0.75, 0.5, 0.25};  // of the grid maximum
  std::vector<double> absolute_t;                       // used in addition
  // Boundary grid levels as (n_u, n_phi).
  std::vector<std::pair<int, int>> grid_levels = {{8, 8}, {8, 16}};
  RegionSampler sampler;
  // 1 - r^2 = kappa * (median nearest-neighbour |1 - <zeta_i, zeta_j>|).
  double kappa = 4.0;
  SimplexQpOptions solver;
  int threads = 1;
};

struct WeakTypeReport {
  std::vector<WeakTypeRow> rows;
  double max_ratio = 0.0;
  // max over (function, alpha) of finest-level max ratio / coarsest-level max ratio
  double refinement_growth = 0.0;
  std::vector<double> level_max_ratio;
};

WeakTypeReport WeakTypeExperiment(const KernelSpec& h2,
                                  const std::vector<TestFunction>& functions,
                                  const WeakTypeOptions& options = {});

}  // namespace ballcap

#endif  // BALLCAP_MAXIMAL_H_
