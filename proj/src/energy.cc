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

#include "ballcap/energy.h"

#include <cmath>
#include <limits>

#include "ballcap/errors.h"

namespace ballcap {

namespace {

void CheckRadius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
}

void CheckDimension(const KernelSpec& spec, const DiscreteMeasure& mu) {
  if (!mu.empty() && mu.dimension() != spec.dimension()) {
    throw DimensionMismatch("measure dimension " + std::to_string(mu.dimension()) +
                            " does not match kernel dimension " +
                            std::to_string(spec.dimension()));
  }
}

double VariantCoefficientFactor(KernelVariant v) {
  switch (v) {
    case KernelVariant::kHolomorphic:
    case KernelVariant::kRealPart:
      return 1.0;
    case KernelVariant::kPluriharmonic:
      return 2.0;
    case KernelVariant::kModulus:
      break;
  }
  throw DomainError("the modulus variant has no moment series");
}

double Phi(GrowthLaw law, double r, double p) {
  switch (law) {
    case GrowthLaw::kLogOneMinusR: return -std::log1p(-r);
    case GrowthLaw::kLogOneMinusR2: return -std::log1p(-r * r);
    case GrowthLaw::kInverse: return 1.0 / (1.0 - r);
    case GrowthLaw::kPower: return std::pow(1.0 - r, -p);
  }
  return 0.0;
}

GrowthFit LinearFit(GrowthLaw law, double p, const std::vector<double>& r,
                    const std::vector<double>& y) {
  const std::size_t n = r.size();
  double sx = 0, sy = 0;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = Phi(law, r[i], p);
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  GrowthFit fit;
  fit.law = law;
  fit.exponent = p;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - fit.intercept - fit.slope * x[i];
    ss_res += e * e;
  }
  fit.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

}  // namespace

Complex MixedEnergyR(const KernelSpec& spec, const DiscreteMeasure& mu,
                     const DiscreteMeasure& nu, double r) {
  CheckRadius(r);
  CheckDimension(spec, mu);
  CheckDimension(spec, nu);
  const double r2 = r * r;
  Complex total = 0.0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      row += spec.At(r2 * Inner(nu.atoms()[i], mu.atoms()[j])).value * mu.weights()[j];
    }
    total += row * nu.weights()[i];
  }
  return total;
}

double EnergyR(const KernelSpec& spec, const DiscreteMeasure& mu, double r) {
  return MixedEnergyR(spec, mu, mu, r).real();
}

double OrbitEnergyR(const KernelSpec& spec, const OrbitStructure& orbits,
                    const std::vector<double>& base_weights, double r) {
  CheckRadius(r);
  const std::size_t b = orbits.base.size();
  if (base_weights.size() != b) {
    throw DimensionMismatch("orbit weights do not match the number of orbits");
  }
  const int d = spec.dimension();
  for (const BallPoint& p : orbits.base) {
    if (p.dimension() != d) throw DimensionMismatch("orbit base dimension mismatch");
  }
  const int m = orbits.order;
  const double r2 = r * r;
  // Phases of U^j per coordinate.
  std::vector<std::vector<Complex>> phase(m, std::vector<Complex>(d));
  for (int j = 0; j < m; ++j) {
    for (int c = 0; c < d; ++c) {
      phase[j][c] = std::conj(UnitRoot(static_cast<long>(orbits.frequencies[c]) * j, m));
    }
  }
  double total = 0.0;
  for (std::size_t k = 0; k < b; ++k) {
    for (std::size_t l = 0; l < b; ++l) {
      if (base_weights[k] == 0.0 || base_weights[l] == 0.0) continue;
      std::vector<Complex> prod(d);
      for (int c = 0; c < d; ++c) {
        prod[c] = orbits.base[k][c] * std::conj(orbits.base[l][c]);
      }
      double sum = 0.0;
      for (int j = 0; j < m; ++j) {
        Complex s = 0.0;
        for (int c = 0; c < d; ++c) s += prod[c] * phase[j][c];
        sum += spec.At(r2 * s).value.real();
      }
      total += base_weights[k] * base_weights[l] * sum / m;
    }
  }
  return total;
}

double EnergySeriesTail(const KernelSpec& spec, double mass, double r, int degree) {
  const double factor = VariantCoefficientFactor(spec.variant());
  const CoefficientSequence& a = spec.coefficients();
  const double rho = r * r;
  double tail = 0.0;
  const int trunc = a.truncation_degree();
  for (int n = degree + 1; n <= trunc; ++n) {
    const double c = a(n) + a(-n);
    if (c != 0.0) tail += c * std::pow(rho, n);
  }
  tail += a.TailBound(rho);
  return factor * mass * mass * tail;
}

SeriesEnergy EnergySeries(const KernelSpec& spec, const DiscreteMeasure& mu, double r,
                          int degree, std::size_t cap) {
  CheckRadius(r);
  CheckDimension(spec, mu);
  const auto [pos, neg] = spec.EffectiveCoefficients();
  const auto moments = Moments(mu, degree, cap);
  const double rho = r * r;
  SeriesEnergy out;
  out.degree = degree;
  for (const MultiIndexMoment& m : moments) {
    int n = 0;
    for (int a : m.alpha) n += a;
    const double bp = n < static_cast<int>(pos.size()) ? pos[n] : 0.0;
    const double bn = (n >= 1 && n - 1 < static_cast<int>(neg.size())) ? neg[n - 1] : 0.0;
    if (bp == 0.0 && bn == 0.0) continue;
    const double w = MultinomialWeight(m.alpha) * std::pow(rho, n);
    out.value += w * (bp * std::norm(m.hat_value) + bn * std::norm(m.check_value));
  }
  double abs_mass = 0.0;
  for (double w : mu.weights()) abs_mass += std::abs(w);
  out.tail_bound = EnergySeriesTail(spec, abs_mass, r, degree);
  return out;
}

std::vector<double> DefaultSchedule(int k_max) {
  std::vector<double> r;
  for (int k = 1; k <= k_max; ++k) r.push_back(1.0 - std::ldexp(1.0, -k));
  return r;
}

std::string GrowthLawName(GrowthLaw law) {
  switch (law) {
    case GrowthLaw::kLogOneMinusR: return "log(1/(1-r))";
    case GrowthLaw::kLogOneMinusR2: return "log(1/(1-r^2))";
    case GrowthLaw::kInverse: return "1/(1-r)";
    case GrowthLaw::kPower: return "(1-r)^-p";
  }
  return "unknown";
}

GrowthFit FitGrowth(GrowthLaw law, const std::vector<double>& r,
                    const std::vector<double>& values) {
  if (r.size() != values.size() || r.size() < 2) {
    throw DomainError("growth fit needs at least two (r, E) pairs");
  }
  if (law != GrowthLaw::kPower) return LinearFit(law, 1.0, r, values);
  GrowthFit best = LinearFit(law, 0.05, r, values);
  for (int i = 6; i <= 300; ++i) {
    GrowthFit f = LinearFit(law, 0.01 * i, r, values);
    if (f.r_squared > best.r_squared) best = f;
  }
  return best;
}

EnergyReport ClassifyEnergies(std::vector<double> schedule, std::vector<double> values,
                              const EnergyLimitOptions& options) {
  if (schedule.size() != values.size() || schedule.empty()) {
    throw DomainError("energy classification needs matching nonempty r and E lists");
  }
  EnergyReport rep;
  rep.r_grid = std::move(schedule);
  rep.e_r_values = std::move(values);
  rep.series_values.assign(rep.r_grid.size(), std::nullopt);
  rep.increments.assign(rep.r_grid.size(), 0.0);
  for (std::size_t k = 1; k < rep.r_grid.size(); ++k) {
    const double prev = rep.e_r_values[k - 1];
    rep.increments[k] = (rep.e_r_values[k] - prev) / std::max(std::abs(prev), 1e-300);
  }
  const int need = options.consecutive;
  bool converged = static_cast<int>(rep.r_grid.size()) > need;
  for (int i = 0; converged && i < need; ++i) {
    const double inc = rep.increments[rep.r_grid.size() - 1 - i];
    converged = std::abs(inc) < options.increment_tolerance;
  }
  if (converged) {
    rep.classification = EnergyClassification::kConverged;
    rep.limit_estimate = rep.e_r_values.back();
    return rep;
  }
  rep.classification = EnergyClassification::kDiverging;
  rep.limit_infinite = true;
  rep.limit_estimate = std::numeric_limits<double>::infinity();
  if (rep.r_grid.size() >= 3) {
    for (GrowthLaw law : {GrowthLaw::kLogOneMinusR, GrowthLaw::kLogOneMinusR2,
                          GrowthLaw::kInverse, GrowthLaw::kPower}) {
      rep.fits.push_back(FitGrowth(law, rep.r_grid, rep.e_r_values));
      if (!rep.best_fit || rep.fits.back().r_squared > rep.best_fit->r_squared) {
        rep.best_fit = rep.fits.back();
      }
    }
  }
  return rep;
}

EnergyReport EnergyLimit(const KernelSpec& spec, const DiscreteMeasure& mu,
                         const std::vector<double>& schedule,
                         const EnergyLimitOptions& options) {
  for (std::size_t k = 1; k < schedule.size(); ++k) {
    if (!(schedule[k] > schedule[k - 1])) {
      throw DomainError("r schedule must be strictly increasing");
    }
  }
  std::vector<double> values;
  for (double r : schedule) values.push_back(EnergyR(spec, mu, r));
  EnergyReport rep = ClassifyEnergies(schedule, values, options);
  if (options.series_degree >= 0) {
    for (std::size_t k = 0; k < schedule.size(); ++k) {
      rep.series_values[k] = EnergySeries(spec, mu, schedule[k], options.series_degree).value;
    }
  }
  return rep;
}

Complex Potential(const KernelSpec& spec, const DiscreteMeasure& mu, double r,
                  const BallPoint& z) {
  CheckRadius(r);
  CheckDimension(spec, mu);
  if (z.dimension() != spec.dimension()) {
    throw DimensionMismatch("potential evaluated at a point of the wrong dimension");
  }
  const double r2 = r * r;
  Complex f = 0.0;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    f += spec.At(r2 * Inner(z, mu.atoms()[j])).value * mu.weights()[j];
  }
  return f;
}

FunctionalIdentityReport FunctionalIdentityCheck(const KernelSpec& spec,
                                                 const DiscreteMeasure& mu, double r,
                                                 const std::vector<Polynomial>& tests) {
  CheckRadius(r);
  CheckDimension(spec, mu);
  FunctionalIdentityReport rep;
  for (const Polynomial& g : tests) {
    if (g.dimension() != spec.dimension()) {
      throw DimensionMismatch("test polynomial dimension does not match the kernel");
    }
    FunctionalIdentityRow row;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      row.direct += mu.weights()[j] * g(mu.atoms()[j].Scaled(r));
    }
    const int deg = std::max(g.degree(), 0);
    std::map<MultiIndex, Complex> hat;
    for (const MultiIndexMoment& m : Moments(mu, deg)) hat[m.alpha] = m.hat_value;
    // f_mu = sum_alpha a_|alpha| (|alpha|!/alpha!) hat mu(alpha) z^alpha.
    for (const auto& [alpha, c] : g.terms()) {
      if (c == Complex(0.0)) continue;
      int n = 0;
      for (int a : alpha) n += a;
      const double norm2 = MonomialNormSquared(spec, alpha);
      const Complex f_coeff =
          spec.coefficients()(n) * MultinomialWeight(alpha) * hat.at(alpha);
      row.coefficient += c * std::pow(r, n) * std::conj(f_coeff) * norm2;
    }
    row.residual = std::abs(row.direct - row.coefficient);
    rep.max_residual = std::max(rep.max_residual, row.residual);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace ballcap
