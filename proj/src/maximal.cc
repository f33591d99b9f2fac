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

#include "ballcap/maximal.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "ballcap/errors.h"
#include "ballcap/parallel.h"

namespace ballcap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Orthonormal basis of the complex orthogonal complement of zeta.
std::vector<std::vector<Complex>> ComplementBasis(const BallPoint& zeta) {
  const int d = zeta.dimension();
  std::vector<std::vector<Complex>> basis;
  for (int k = 0; k < d && static_cast<int>(basis.size()) < d - 1; ++k) {
    std::vector<Complex> v(d, 0.0);
    v[k] = 1.0;
    auto project_out = [&](const std::vector<Complex>& u) {
      Complex c = 0.0;
      for (int i = 0; i < d; ++i) c += v[i] * std::conj(u[i]);
      for (int i = 0; i < d; ++i) v[i] -= c * u[i];
    };
    project_out(zeta.coordinates());
    for (const auto& b : basis) project_out(b);
    double n2 = 0.0;
    for (const Complex& c : v) n2 += std::norm(c);
    if (n2 < 1e-12) continue;
    const double n = std::sqrt(n2);
    for (Complex& c : v) c /= n;
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

bool RegionContains(const KoranyiRegion& region, const BallPoint& z) {
  if (!(z.norm() < 1.0)) throw DomainError("Koranyi regions contain interior points only");
  const double lhs = std::abs(1.0 - Inner(z, region.zeta));
  const double rhs = 0.5 * region.alpha * (1.0 - z.norm() * z.norm());
  return lhs < rhs;
}

double KoranyiDistance(const BallPoint& a, const BallPoint& b) {
  return std::sqrt(std::abs(1.0 - Inner(a, b)));
}

double TriangleResidual(const BallPoint& a, const BallPoint& b, const BallPoint& c) {
  return KoranyiDistance(a, c) - KoranyiDistance(a, b) - KoranyiDistance(b, c);
}

ComparabilityRatios ComparabilityCheck(const BallPoint& zeta, const BallPoint& w,
                                       const BallPoint& psi, double alpha) {
  if (!(w.norm() < 1.0)) throw DomainError("comparability needs an interior point w");
  if (psi.norm() < w.norm()) throw DomainError("comparability needs |psi| >= |w|");
  if (!RegionContains({zeta, alpha}, psi)) {
    throw DomainError("comparability needs psi inside the Koranyi region");
  }
  auto h2 = [](Complex s) { return (1.0 - std::norm(s)) / std::norm(1.0 - s); };
  const Complex sz = Inner(zeta, w), sp = Inner(psi, w);
  ComparabilityRatios out;
  out.kernel_ratio = h2(sp) / h2(sz);
  out.distance_ratio = std::abs(1.0 - sz) / std::abs(1.0 - sp);
  return out;
}

std::vector<BallPoint> RegionCandidates(const BallPoint& zeta, double alpha_max,
                                        const RegionSampler& sampler) {
  const int d = zeta.dimension();
  const auto complement = ComplementBasis(zeta);
  std::vector<std::vector<Complex>> etas;
  for (int k = 0; k < sampler.tangential; ++k) {
    std::vector<Complex> eta(d);
    const double beta = std::numbers::pi * (k + 0.5) / sampler.tangential;
    const double gamma = kTwoPi * 0.6180339887498949 * k;
    for (int i = 0; i < d; ++i) eta[i] = Complex(0.0, 1.0) * zeta[i];
    if (!complement.empty()) {
      const auto& v = complement[k % complement.size()];
      const Complex phase = std::polar(1.0, gamma);
      for (int i = 0; i < d; ++i) {
        eta[i] = std::cos(beta) * eta[i] + std::sin(beta) * phase * v[i];
      }
    }
    etas.push_back(std::move(eta));
    if (complement.empty()) break;  // d = 1: only the direction i zeta
  }
  std::vector<BallPoint> out;
  const int R = std::max(sampler.radial, 2);
  const double depth = 1.0 - sampler.r_max;
  for (int i = 0; i < R; ++i) {
    const double s = 1.0 - std::pow(depth, static_cast<double>(i) / (R - 1));
    out.push_back(zeta.Scaled(std::min(s, sampler.r_max)));
    if (s <= 0.0) continue;
    const double c = (1.0 - 0.5 * alpha_max * (1.0 - s * s)) / s;
    const double theta_max = c <= -1.0 ? std::numbers::pi : (c >= 1.0 ? 0.0 : std::acos(c));
    if (theta_max <= 0.0) continue;
    const int A = sampler.angular;
    for (int a = 0; a < A; ++a) {
      const double theta = theta_max * (2.0 * a + 1.0 - A) / A;
      if (theta == 0.0) continue;
      for (const auto& eta : etas) {
        std::vector<Complex> z(d);
        for (int k = 0; k < d; ++k) {
          z[k] = s * (std::cos(theta) * zeta[k] + std::sin(theta) * eta[k]);
        }
        out.emplace_back(std::move(z));
      }
    }
  }
  return out;
}

std::vector<MaximalSample> SampledMaximal(const BallFunction& abs_f, const BallPoint& zeta,
                                          const std::vector<double>& alphas,
                                          const RegionSampler& sampler) {
  if (alphas.empty()) return {};
  const double alpha_max = *std::max_element(alphas.begin(), alphas.end());
  const std::vector<BallPoint> candidates = RegionCandidates(zeta, alpha_max, sampler);
  std::vector<MaximalSample> out(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    out[a].zeta = zeta;
    out[a].alpha = alphas[a];
    out[a].r_max = sampler.r_max;
  }
  for (const BallPoint& z : candidates) {
    const double lhs = std::abs(1.0 - Inner(z, zeta));
    const double depth = 1.0 - z.norm() * z.norm();
    double value = -1.0;
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      if (!(lhs < 0.5 * alphas[a] * depth)) continue;
      if (value < 0.0) value = abs_f(z);
      out[a].sampled_sup = std::max(out[a].sampled_sup, value);
      ++out[a].sample_size;
    }
  }
  return out;
}

std::vector<BallPoint> SphereGrid2(int n_u, int n_phi) {
  std::vector<BallPoint> grid;
  grid.reserve(static_cast<std::size_t>(n_u) * n_phi * n_phi);
  for (int j = 0; j < n_u; ++j) {
    const double u = (j + 0.5) / n_u;
    const double a = std::sqrt(u), b = std::sqrt(1.0 - u);
    for (int k1 = 0; k1 < n_phi; ++k1) {
      for (int k2 = 0; k2 < n_phi; ++k2) {
        grid.push_back(BallPoint({a * UnitRoot(k1, n_phi), b * UnitRoot(k2, n_phi)}));
      }
    }
  }
  return grid;
}

TestFunction NormalizedKernel(const KernelSpec& h2, const BallPoint& w, std::string id) {
  const double kww = h2.RealAt(Inner(w, w));
  const double inv = 1.0 / std::sqrt(kww);
  TestFunction f;
  f.id = std::move(id);
  f.norm_sq = 1.0;
  f.abs_value = [h2, w, inv](const BallPoint& z) {
    return std::abs(h2.RealAt(Inner(z, w))) * inv;
  };
  return f;
}

TestFunction EquilibriumPotential(const KernelSpec& h2, const std::vector<BallPoint>& points,
                                  const EquilibriumResult& eq, double r, std::string id) {
  std::vector<BallPoint> atoms;
  std::vector<double> coeff;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (eq.weights[j] > 0.0) {
      atoms.push_back(points[j]);
      coeff.push_back(eq.cap_r * eq.weights[j]);
    }
  }
  const double r2 = r * r, r4 = r2 * r2;
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      norm_sq += coeff[i] * coeff[j] * h2.RealAt(r4 * Inner(atoms[i], atoms[j]));
    }
  }
  TestFunction f;
  f.id = std::move(id);
  f.norm_sq = norm_sq;
  f.abs_value = [h2, atoms, coeff, r2](const BallPoint& z) {
    double s = 0.0;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      s += coeff[j] * h2.RealAt(r2 * Inner(z, atoms[j]));
    }
    return std::abs(s);
  };
  return f;
}

WeakTypeReport WeakTypeExperiment(const KernelSpec& h2,
                                  const std::vector<TestFunction>& functions,
                                  const WeakTypeOptions& options) {
  WeakTypeReport rep;
  // (function, alpha) -> max ratio per level
  std::map<std::pair<std::size_t, std::size_t>, std::vector<double>> per_pair;
  for (std::size_t level = 0; level < options.grid_levels.size(); ++level) {
    const auto [n_u, n_phi] = options.grid_levels[level];
    const std::vector<BallPoint> grid = SphereGrid2(n_u, n_phi);
    const std::size_t n = grid.size();
    std::vector<double> nearest(n, 2.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) nearest[i] = std::min(nearest[i], std::abs(1.0 - Inner(grid[i], grid[j])));
      }
    }
    std::nth_element(nearest.begin(), nearest.begin() + n / 2, nearest.end());
    const double scale = nearest[n / 2];
    const double r = std::sqrt(std::max(0.0, 1.0 - std::min(options.kappa * scale, 1.0)));
    std::map<std::vector<int>, std::pair<double, std::string>> cap_cache;
    double level_max = 0.0;
    for (std::size_t fi = 0; fi < functions.size(); ++fi) {
      const TestFunction& f = functions[fi];
      std::vector<std::vector<double>> m(options.alphas.size(), std::vector<double>(n));
      ParallelFor(n, options.threads, [&](std::size_t i) {
        const auto samples = SampledMaximal(f.abs_value, grid[i], options.alphas,
                                            options.sampler);
        for (std::size_t a = 0; a < samples.size(); ++a) m[a][i] = samples[a].sampled_sup;
      });
      for (std::size_t a = 0; a < options.alphas.size(); ++a) {
        const double mmax = *std::max_element(m[a].begin(), m[a].end());
        std::vector<double> ts;
        for (double frac : options.t_fractions) ts.push_back(frac * mmax);
        ts.insert(ts.end(), options.absolute_t.begin(), options.absolute_t.end());
        double pair_max = 0.0;
        for (double t : ts) {
          WeakTypeRow row;
          row.function_id = f.id;
          row.alpha = options.alphas[a];
          row.grid_level = static_cast<int>(level);
          row.grid_size = static_cast<int>(n);
          row.t = t;
          row.capacity_r = r;
          std::vector<int> members;
          for (std::size_t i = 0; i < n; ++i) {
            if (m[a][i] > t) members.push_back(static_cast<int>(i));
          }
          row.superlevel_size = static_cast<int>(members.size());
          if (!members.empty()) {
            auto it = cap_cache.find(members);
            if (it == cap_cache.end()) {
              std::vector<BallPoint> pts;
              for (int i : members) pts.push_back(grid[i]);
              std::pair<double, std::string> value{0.0, ""};
              try {
                value.first = SolveEquilibrium(GramianProblem::Build(h2, pts, r, options.threads),
                                               options.solver)
                                  .cap_r;
              } catch (const ConvergenceFailure& e) {
                value.first = 1.0 / e.best().energy;
                value.second = e.what();
              }
              it = cap_cache.emplace(members, value).first;
            }
            row.cap_estimate = it->second.first;
            row.error = it->second.second;
            row.ratio = row.cap_estimate * t * t / f.norm_sq;
          }
          pair_max = std::max(pair_max, row.ratio);
          rep.max_ratio = std::max(rep.max_ratio, row.ratio);
          level_max = std::max(level_max, row.ratio);
          rep.rows.push_back(std::move(row));
        }
        per_pair[{fi, a}].push_back(pair_max);
      }
    }
    rep.level_max_ratio.push_back(level_max);
  }
  for (const auto& [key, values] : per_pair) {
    if (values.size() >= 2 && values.front() > 0.0) {
      rep.refinement_growth = std::max(rep.refinement_growth, values.back() / values.front());
    }
  }
  return rep;
}

}  // namespace ballcap
