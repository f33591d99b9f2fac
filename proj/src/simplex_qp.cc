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

#include "ballcap/simplex_qp.h"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "ballcap/kernels.h"

namespace ballcap {

namespace {

double GapTarget(const SimplexQpOptions& o, double energy) {
  return std::min(o.relative_tolerance * std::max(1.0, energy), o.absolute_tolerance);
}

Eigen::Index ArgMin(const Eigen::VectorXd& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (v[i] < v[best]) best = i;
  }
  return best;
}

SimplexQpResult MakeResult(const Eigen::MatrixXd& g, Eigen::VectorXd weights,
                           SolverStage stage, long iterations) {
  SimplexQpResult r;
  r.weights = std::move(weights);
  r.stage = stage;
  r.iterations = iterations;
  Certify(g, r);
  return r;
}

void Keep(SimplexQpResult& best, SimplexQpResult candidate) {
  const long iterations = best.iterations + candidate.iterations;
  if (best.weights.size() == 0 || candidate.gap < best.gap) best = std::move(candidate);
  best.iterations = iterations;
}

void NegativeCurvature(double curvature, double scale) {
  throw ConditioningError("Gramian is not positive semidefinite: curvature " +
                          std::to_string(curvature) + " along an edge of the simplex " +
                          "(scale " + std::to_string(scale) + ")");
}

// Pairwise Frank-Wolfe with exact line search. Returns when converged, on
// stagnation, or at the iteration cap.
SimplexQpResult PairwiseFrankWolfe(const Eigen::MatrixXd& g, const SimplexQpOptions& o,
                                   double scale, Eigen::VectorXd lambda) {
  const Eigen::Index n = g.rows();
  Eigen::VectorXd grad = g * lambda;
  const long window = std::max<long>(1000, 2 * n);
  double window_gap = std::numeric_limits<double>::infinity();
  long it = 0;
  for (; it < o.max_iterations; ++it) {
    if (it % window == 0) {
      grad = g * lambda;
      const double energy = lambda.dot(grad);
      const double gap = 2.0 * (energy - grad.minCoeff());
      if (gap <= GapTarget(o, energy)) break;
      if (it > 0 && gap > 0.5 * window_gap) break;
      window_gap = gap;
    }
    const Eigen::Index s = ArgMin(grad);
    Eigen::Index a = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (lambda[i] > 0.0 && (a < 0 || grad[i] > grad[a])) a = i;
    }
    const double slope = grad[a] - grad[s];
    if (a == s || slope <= 0.0) break;
    const double curvature = g(s, s) + g(a, a) - 2.0 * g(s, a);
    if (curvature < -o.psd_tolerance * scale) NegativeCurvature(curvature, scale);
    double step = lambda[a];
    if (curvature > 0.0) step = std::min(step, slope / curvature);
    if (step <= 0.0) break;
    lambda[s] += step;
    if (step == lambda[a]) {
      lambda[a] = 0.0;
    } else {
      lambda[a] -= step;
    }
    grad += step * (g.col(s) - g.col(a));
  }
  return MakeResult(g, std::move(lambda), SolverStage::kPairwiseFrankWolfe, it);
}

// Lower-triangular Cholesky factor of M_S = G_S + 1 1' over an active set,
// updated by appending and deleting indices.
class ActiveFactor {
 public:
  explicit ActiveFactor(const Eigen::MatrixXd& g) : g_(g) {}

  int size() const { return static_cast<int>(index_.size()); }
  const std::vector<Eigen::Index>& index() const { return index_; }

  // Switches to dense KKT solves when the new column is numerically
  // dependent on the active set.
  void Append(Eigen::Index j, double pivot_floor) {
    if (dense_) {
      index_.push_back(j);
      return;
    }
    const int k = size();
    Eigen::VectorXd c(k);
    for (int i = 0; i < k; ++i) c[i] = g_(index_[i], j) + 1.0;
    Eigen::VectorXd l = c;
    if (k > 0) {
      l = factor_.topLeftCorner(k, k).triangularView<Eigen::Lower>().solve(c);
    }
    const double diag = g_(j, j) + 1.0;
    const double pivot2 = diag - l.squaredNorm();
    if (!(pivot2 > pivot_floor * diag)) {
      dense_ = true;
      index_.push_back(j);
      return;
    }
    if (factor_.rows() < k + 1) {
      Eigen::MatrixXd grown = Eigen::MatrixXd::Zero(2 * (k + 1), 2 * (k + 1));
      grown.topLeftCorner(k, k) = factor_.topLeftCorner(k, k);
      factor_.swap(grown);
    }
    factor_.row(k).setZero();
    factor_.block(k, 0, 1, k) = l.transpose();
    factor_(k, k) = std::sqrt(pivot2);
    index_.push_back(j);
  }

  void Remove(int p) {
    const int k = size();
    if (dense_) {
      index_.erase(index_.begin() + p);
      return;
    }
    // Drop row p, then rotate columns to restore the lower triangle.
    for (int i = p; i < k - 1; ++i) factor_.row(i) = factor_.row(i + 1);
    factor_.row(k - 1).setZero();
    for (int c = p; c < k - 1; ++c) {
      const double a = factor_(c, c), b = factor_(c, c + 1);
      const double h = std::hypot(a, b);
      if (h == 0.0) continue;
      const double cs = a / h, sn = b / h;
      for (int i = c; i < k - 1; ++i) {
        const double x = factor_(i, c), y = factor_(i, c + 1);
        factor_(i, c) = cs * x + sn * y;
        factor_(i, c + 1) = -sn * x + cs * y;
      }
    }
    for (int i = 0; i < k; ++i) factor_(i, k - 1) = 0.0;
    index_.erase(index_.begin() + p);
  }

  // Minimizer of w' G_S w on the affine hull {sum w = 1}.
  Eigen::VectorXd AffineMinimizer() const {
    const int k = size();
    if (dense_) {
      // [G_S 1; 1' 0] [w; -mu] = [0; 1]
      Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) kkt(i, j) = g_(index_[i], index_[j]);
        kkt(i, k) = kkt(k, i) = 1.0;
      }
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
      rhs[k] = 1.0;
      const Eigen::VectorXd x = kkt.colPivHouseholderQr().solve(rhs);
      return x.head(k);
    }
    const auto l = factor_.topLeftCorner(k, k).triangularView<Eigen::Lower>();
    Eigen::VectorXd y = l.solve(Eigen::VectorXd::Ones(k));
    y = l.transpose().solve(y);
    return y / y.sum();
  }

 private:
  const Eigen::MatrixXd& g_;
  Eigen::MatrixXd factor_;
  std::vector<Eigen::Index> index_;
  bool dense_ = false;
};

// Wolfe's minimum-norm-point method in Gram form.
SimplexQpResult ActiveSet(const Eigen::MatrixXd& g, const SimplexQpOptions& o) {
  const Eigen::Index n = g.rows();
  constexpr double kPivotFloor = 1e-13;
  constexpr double kZero = 1e-15;
  Eigen::Index j0 = 0;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (g(i, i) < g(j0, j0)) j0 = i;
  }
  ActiveFactor factor(g);
  factor.Append(j0, 0.0);
  std::vector<double> w = {1.0};
  Eigen::VectorXd grad = g.col(j0);
  auto full = [&]() {
    Eigen::VectorXd lambda = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < factor.size(); ++i) lambda[factor.index()[i]] = w[i];
    return lambda;
  };
  long major = 0;
  for (; major < o.max_iterations; ++major) {
    double energy = 0.0;
    for (int i = 0; i < factor.size(); ++i) energy += w[i] * grad[factor.index()[i]];
    const Eigen::Index j = ArgMin(grad);
    if (2.0 * (energy - grad[j]) <= GapTarget(o, energy)) break;
    if (std::find(factor.index().begin(), factor.index().end(), j) !=
        factor.index().end()) {
      break;
    }
    factor.Append(j, kPivotFloor);
    w.push_back(0.0);
    bool stalled = false;
    for (int minor = 0;; ++minor) {
      const Eigen::VectorXd a = factor.AffineMinimizer();
      if ((a.array() > kZero).all()) {
        w.assign(a.data(), a.data() + a.size());
        break;
      }
      double theta = 1.0;
      int drop = -1;
      for (int i = 0; i < factor.size(); ++i) {
        if (a[i] <= kZero) {
          const double t = w[i] / (w[i] - a[i]);
          if (t < theta || drop < 0) {
            theta = t;
            drop = i;
          }
        }
      }
      if (minor == 0 && drop == factor.size() - 1 && theta <= 0.0) {
        // The entering index would leave at once; numerically stuck.
        factor.Remove(drop);
        w.pop_back();
        stalled = true;
        break;
      }
      for (int i = 0; i < factor.size(); ++i) w[i] += theta * (a[i] - w[i]);
      w[drop] = 0.0;
      double total = 0.0;
      for (int i = factor.size() - 1; i >= 0; --i) {
        if (w[i] <= kZero) {
          factor.Remove(i);
          w.erase(w.begin() + i);
        } else {
          total += w[i];
        }
      }
      for (double& x : w) x /= total;
    }
    grad.setZero();
    for (int i = 0; i < factor.size(); ++i) grad += w[i] * g.col(factor.index()[i]);
    if (stalled) break;
  }
  return MakeResult(g, full(), SolverStage::kActiveSet, major);
}

// Accelerated projected gradient with adaptive restart.
SimplexQpResult ProjectedGradient(const Eigen::MatrixXd& g, const Eigen::VectorXd& start,
                                  const SimplexQpOptions& o) {
  // Power iteration for the largest eigenvalue.
  Eigen::VectorXd v = Eigen::VectorXd::Ones(g.rows()).normalized();
  double lmax = 0.0;
  for (int i = 0; i < 100; ++i) {
    Eigen::VectorXd gv = g * v;
    const double nrm = gv.norm();
    if (nrm == 0.0) break;
    lmax = nrm;
    v = gv / nrm;
  }
  const double step = lmax > 0.0 ? 0.5 / (1.01 * lmax) : 1.0;
  Eigen::VectorXd x = start, y = start, grad;
  double t = 1.0;
  double fx = x.dot(g * x);
  long it = 0;
  for (; it < o.max_iterations; ++it) {
    grad = g * y;
    Eigen::VectorXd next = ProjectOntoSimplex(y - 2.0 * step * grad);
    const double fn = next.dot(g * next);
    if (fn > fx) {
      t = 1.0;
      y = x;
      continue;
    }
    const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    y = next + ((t - 1.0) / tn) * (next - x);
    x = std::move(next);
    fx = fn;
    t = tn;
    if (it % 50 == 0) {
      const Eigen::VectorXd gx = g * x;
      const double e = x.dot(gx);
      if (2.0 * (e - gx.minCoeff()) <= GapTarget(o, e)) break;
    }
  }
  return MakeResult(g, std::move(x), SolverStage::kProjectedGradient, it);
}

std::string FormatGap(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

std::string SolverStageName(SolverStage stage) {
  switch (stage) {
    case SolverStage::kPairwiseFrankWolfe: return "pairwise-frank-wolfe";
    case SolverStage::kActiveSet: return "active-set";
    case SolverStage::kProjectedGradient: return "projected-gradient";
  }
  return "unknown";
}

void Certify(const Eigen::MatrixXd& gramian, SimplexQpResult& result) {
  const Eigen::VectorXd grad = gramian * result.weights;
  result.energy = result.weights.dot(grad);
  result.min_gradient = grad.minCoeff();
  result.variational_residual = result.min_gradient - result.energy;
  result.gap = -2.0 * result.variational_residual;
}

Eigen::VectorXd ProjectOntoSimplex(const Eigen::VectorXd& v) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumulative = 0.0, tau = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    cumulative += u[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (u[k] - candidate > 0.0) tau = candidate;
  }
  return (v.array() - tau).max(0.0).matrix();
}

SimplexQpResult MinimizeOnSimplex(const Eigen::MatrixXd& gramian,
                                  const SimplexQpOptions& options) {
  const Eigen::Index n = gramian.rows();
  if (n < 1 || gramian.cols() != n) {
    throw DomainError("simplex QP needs a nonempty square matrix");
  }
  if (!gramian.allFinite()) throw ConditioningError("Gramian has non-finite entries");
  const double scale = gramian.diagonal().cwiseAbs().maxCoeff();
  if ((gramian - gramian.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, scale)) {
    throw ConditioningError("Gramian is not symmetric to 1e-12");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (gramian(i, i) < -options.psd_tolerance * scale) {
      NegativeCurvature(gramian(i, i), scale);
    }
  }
  if (n <= options.spectrum_check_limit && n > 1) {
    const SpectrumDiagnostics d = DiagnoseSpectrum(gramian, options.psd_tolerance);
    if (!d.psd) {
      throw ConditioningError("Gramian minimum eigenvalue " +
                              std::to_string(d.min_eigenvalue) + " below -" +
                              std::to_string(options.psd_tolerance) + " * ||G||");
    }
  }
  SimplexQpResult best;
  auto done = [&](const SimplexQpResult& r) { return r.gap <= GapTarget(options, r.energy); };
  Keep(best, PairwiseFrankWolfe(gramian, options, scale,
                                Eigen::VectorXd::Constant(n, 1.0 / n)));
  if (!done(best)) Keep(best, ActiveSet(gramian, options));
  if (!done(best) && best.stage == SolverStage::kActiveSet) {
    Keep(best, PairwiseFrankWolfe(gramian, options, scale, best.weights));
  }
  if (!done(best)) Keep(best, ProjectedGradient(gramian, best.weights, options));
  best.converged = done(best);
  if (!best.converged) {
    throw ConvergenceFailure("simplex QP did not reach the gap tolerance; best gap " +
                                 FormatGap(best.gap) + " at energy " + FormatGap(best.energy),
                             best);
  }
  return best;
}

NonnegativeQpResult SolveNonnegativeQp(const Eigen::MatrixXd& g, double tolerance,
                                       long max_sweeps) {
  const Eigen::Index n = g.rows();
  NonnegativeQpResult out;
  out.x = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd gx = Eigen::VectorXd::Zero(n);
  auto kkt = [&]() {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double slack = gx[i] - 1.0;
      worst = std::max(worst, -slack);
      if (out.x[i] > 0.0) worst = std::max(worst, std::abs(slack));
    }
    return worst;
  };
  for (out.sweeps = 0; out.sweeps < max_sweeps; ++out.sweeps) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!(g(i, i) > 0.0)) continue;
      const double updated = std::max(0.0, out.x[i] - (gx[i] - 1.0) / g(i, i));
      const double delta = updated - out.x[i];
      if (delta != 0.0) {
        out.x[i] = updated;
        gx += delta * g.col(i);
      }
    }
    if (out.sweeps % 10 == 9) {
      gx = g * out.x;
      if (kkt() <= tolerance) {
        out.converged = true;
        ++out.sweeps;
        break;
      }
    }
  }
  gx = g * out.x;
  out.kkt_residual = kkt();
  out.converged = out.kkt_residual <= tolerance;
  return out;
}

}  // namespace ballcap
