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

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

namespace ballcap {
namespace {

Eigen::MatrixXd RandomPsd(int n, int rank, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd a(n, rank);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < rank; ++j) a(i, j) = g(rng);
  }
  Eigen::MatrixXd m = a * a.transpose() / rank;
  return 0.5 * (m + m.transpose());
}

// Exhaustive oracle: on each support S the minimizer of l'Gl subject to
// sum l = 1 solves [G_S 1; 1' 0]; keep the best feasible one.
double BruteForceMinimum(const Eigen::MatrixXd& g) {
  const int n = static_cast<int>(g.rows());
  double best = std::numeric_limits<double>::infinity();
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) s.push_back(i);
    }
    const int k = static_cast<int>(s.size());
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) kkt(a, b) = g(s[a], s[b]);
      kkt(a, k) = kkt(k, a) = 1.0;
    }
    rhs[k] = 1.0;
    const Eigen::VectorXd x = kkt.fullPivLu().solve(rhs);
    if (!((kkt * x - rhs).norm() < 1e-9)) continue;
    if ((x.head(k).array() < -1e-12).any()) continue;
    Eigen::VectorXd l = Eigen::VectorXd::Zero(n);
    for (int a = 0; a < k; ++a) l[s[a]] = x[a];
    best = std::min(best, l.dot(g * l));
  }
  return best;
}

TEST(SimplexQpTest, IdentityGivesUniformWeights) {
  const SimplexQpResult r = MinimizeOnSimplex(Eigen::MatrixXd::Identity(7, 7));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.energy, 1.0 / 7.0, 1e-12);
  for (int i = 0; i < 7; ++i) EXPECT_NEAR(r.weights[i], 1.0 / 7.0, 1e-9);
}

TEST(SimplexQpTest, DiagonalClosedForm) {
  Eigen::VectorXd d(4);
  d << 1.0, 2.0, 4.0, 8.0;
  const SimplexQpResult r = MinimizeOnSimplex(d.asDiagonal().toDenseMatrix());
  const double harmonic = 1.0 / (d.array().inverse().sum());
  EXPECT_NEAR(r.energy, harmonic, 1e-10);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(r.weights[i], harmonic / d[i], 1e-8);
}

TEST(SimplexQpTest, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(29);
  SimplexQpOptions tight;
  tight.relative_tolerance = 1e-13;
  tight.absolute_tolerance = 1e-12;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    const Eigen::MatrixXd g =
        RandomPsd(n, 1 + trial % n, rng) + 0.05 * Eigen::MatrixXd::Ones(n, n) +
        1e-3 * Eigen::MatrixXd::Identity(n, n);
    const SimplexQpResult r = MinimizeOnSimplex(g, tight);
    EXPECT_NEAR(r.energy, BruteForceMinimum(g), 1e-10) << "trial " << trial;
    EXPECT_NEAR(r.weights.sum(), 1.0, 1e-12);
    EXPECT_GE(r.weights.minCoeff(), 0.0);
    EXPECT_GE(r.variational_residual, -1e-12);
  }
}

TEST(SimplexQpTest, CertifyRecomputesTheGap) {
  std::mt19937_64 rng(1);
  const Eigen::MatrixXd g = RandomPsd(6, 6, rng);
  SimplexQpResult r;
  r.weights = Eigen::VectorXd::Constant(6, 1.0 / 6.0);
  Certify(g, r);
  EXPECT_NEAR(r.energy, r.weights.dot(g * r.weights), 1e-15);
  EXPECT_NEAR(r.gap, -2.0 * r.variational_residual, 1e-15);
  EXPECT_NEAR(r.min_gradient, (g * r.weights).minCoeff(), 1e-15);
}

TEST(SimplexQpTest, DeterministicAcrossRuns) {
  std::mt19937_64 rng(8);
  const Eigen::MatrixXd g = RandomPsd(40, 10, rng);
  const SimplexQpResult a = MinimizeOnSimplex(g), b = MinimizeOnSimplex(g);
  EXPECT_EQ(a.energy, b.energy);
  EXPECT_TRUE(a.weights == b.weights);
}

TEST(SimplexQpTest, RejectsBadMatrices) {
  Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(3, 3);
  asym(0, 1) = 0.5;
  EXPECT_THROW(MinimizeOnSimplex(asym), ConditioningError);
  EXPECT_THROW(MinimizeOnSimplex(-Eigen::MatrixXd::Identity(3, 3)), Error);
  Eigen::MatrixXd indefinite(2, 2);
  indefinite << 1.0, 2.0, 2.0, 1.0;
  EXPECT_THROW(MinimizeOnSimplex(indefinite), ConditioningError);
  EXPECT_THROW(MinimizeOnSimplex(Eigen::MatrixXd(0, 0)), DomainError);
}

TEST(SimplexProjectionTest, ProjectsOntoTheSimplex) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 2.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd v(8);
    for (int i = 0; i < 8; ++i) v[i] = g(rng);
    const Eigen::VectorXd p = ProjectOntoSimplex(v);
    EXPECT_NEAR(p.sum(), 1.0, 1e-12);
    EXPECT_GE(p.minCoeff(), 0.0);
    EXPECT_LT((ProjectOntoSimplex(p) - p).norm(), 1e-12);
    // No random simplex point is closer to v.
    for (int k = 0; k < 20; ++k) {
      Eigen::VectorXd q(8);
      for (int i = 0; i < 8; ++i) q[i] = -std::log(u(rng) + 1e-300);
      q /= q.sum();
      EXPECT_LE((p - v).norm(), (q - v).norm() + 1e-12);
    }
  }
}

// min 1/2 x'Gx - 1'x over x >= 0 has value -1/(2 E) where E is the simplex
// minimum.
TEST(NonnegativeQpTest, ValueIsMinusHalfTheCapacity) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXd g =
        RandomPsd(12, 12, rng) + 0.1 * Eigen::MatrixXd::Ones(12, 12);
    const NonnegativeQpResult nn = SolveNonnegativeQp(g, 1e-12, 1000000);
    ASSERT_TRUE(nn.converged);
    const double value = 0.5 * nn.x.dot(g * nn.x) - nn.x.sum();
    const double e = MinimizeOnSimplex(g).energy;
    EXPECT_NEAR(value, -0.5 / e, 1e-8);
  }
}

}  // namespace
}  // namespace ballcap
