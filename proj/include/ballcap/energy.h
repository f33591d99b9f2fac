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

#ifndef BALLCAP_ENERGY_H_
#define BALLCAP_ENERGY_H_

#include <optional>
#include <string>
#include <vector>

#include "ballcap/kernels.h"
#include "ballcap/measures.h"
#include "ballcap/polynomial.h"

namespace ballcap {

// E_r(mu, nu) = sum_i sum_j k(r b_i, r a_j) mu_j nu_i with atoms a of mu and
// b of nu. Complex only for the holomorphic variant.
Complex MixedEnergyR(const KernelSpec& spec, const DiscreteMeasure& mu,
                     const DiscreteMeasure& nu, double r);
// E_r(mu) = E_r(mu, mu); real for every variant since weights are real.
double EnergyR(const KernelSpec& spec, const DiscreteMeasure& mu, double r);

// Energy of the measure that spreads base_weights[l] uniformly over the
// orbit of orbits.base[l]: sum_{k,l} w_k w_l (1/m) sum_j k(r b_k, r U^j b_l).
double OrbitEnergyR(const KernelSpec& spec, const OrbitStructure& orbits,
                    const std::vector<double>& base_weights, double r);

struct SeriesEnergy {
  double value = 0.0;
  double tail_bound = 0.0;  // bound on the omitted degrees
  int degree = 0;
};
// The moment series sum_n b_n r^{2n} sum_{|alpha|=n} (|alpha|!/alpha!)
// |hat mu(alpha)|^2 plus the conjugate branch, truncated at `degree`.
SeriesEnergy EnergySeries(const KernelSpec& spec, const DiscreteMeasure& mu, double r,
                          int degree, std::size_t cap = kDefaultMultiIndexCap);
// Bound (sum |w|)^2 sum_{n > degree} (b_n + b_{-n}) r^{2n} on the omitted part.
double EnergySeriesTail(const KernelSpec& spec, double mass, double r, int degree);

// r_k = 1 - 2^{-k}, k = 1..k_max.
std::vector<double> DefaultSchedule(int k_max = 14);

enum class GrowthLaw {
  kLogOneMinusR,    // log(1 / (1 - r))
  kLogOneMinusR2,   // log(1 / (1 - r^2))
  kInverse,         // 1 / (1 - r)
  kPower,           // (1 - r)^{-p}, p fitted
};
std::string GrowthLawName(GrowthLaw law);

// Least-squares fit E ~ intercept + slope * phi(r).
struct GrowthFit {
  GrowthLaw law = GrowthLaw::kLogOneMinusR;
  double intercept = 0.0;
  double slope = 0.0;
  double exponent = 1.0;  // p for kPower
  double r_squared = 0.0;
};
GrowthFit FitGrowth(GrowthLaw law, const std::vector<double>& r,
                    const std::vector<double>& values);

enum class EnergyClassification { kConverged, kDiverging };

struct EnergyReport {
  std::vector<double> r_grid;
  std::vector<double> e_r_values;
  std::vector<std::optional<double>> series_values;
  std::vector<double> increments;  // relative increments, first entry 0
  double limit_estimate = 0.0;
  bool limit_infinite = false;
  EnergyClassification classification = EnergyClassification::kConverged;
  std::vector<GrowthFit> fits;  // one per law; empty when converged
  std::optional<GrowthFit> best_fit;
};

struct EnergyLimitOptions {
  double increment_tolerance = 1e-6;
  int consecutive = 3;
  // Degree of the cross-validating moment series; negative disables it.
  int series_degree = -1;
};

// E_r along the schedule. Converged when the last `consecutive` relative
// increments are below the tolerance; otherwise diverging with growth fits.
EnergyReport EnergyLimit(const KernelSpec& spec, const DiscreteMeasure& mu,
                         const std::vector<double>& schedule,
                         const EnergyLimitOptions& options = {});
// Same classification for values computed elsewhere.
EnergyReport ClassifyEnergies(std::vector<double> schedule, std::vector<double> values,
                              const EnergyLimitOptions& options = {});

// f(z) = sum_j k(r z, r a_j) w_j for the kernel's variant.
Complex Potential(const KernelSpec& spec, const DiscreteMeasure& mu, double r,
                  const BallPoint& z);

struct FunctionalIdentityRow {
  Complex direct;       // sum_j w_j g(r a_j)
  Complex coefficient;  // <g_r, f_mu> from monomial norms
  double residual = 0.0;
};
struct FunctionalIdentityReport {
  std::vector<FunctionalIdentityRow> rows;
  double max_residual = 0.0;
};
// Compares the integral of g_r against the measure with the inner product
// of g_r and the potential f_mu in coefficient space.
FunctionalIdentityReport FunctionalIdentityCheck(const KernelSpec& spec,
                                                 const DiscreteMeasure& mu, double r,
                                                 const std::vector<Polynomial>& tests);

}  // namespace ballcap

#endif  // BALLCAP_ENERGY_H_
