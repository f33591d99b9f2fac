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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

namespace ballcap {
namespace {

BallPoint RandomSphere(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return BallPoint::Normalized({Complex(g(rng), g(rng)), Complex(g(rng), g(rng))});
}

BallPoint RandomInterior(std::mt19937_64& rng, double max_radius) {
  std::uniform_real_distribution<double> u(0.0, max_radius);
  return RandomSphere(rng).Scaled(u(rng));
}

// Along the radius s zeta the region condition reduces to s > 2 / alpha - 1.
TEST(KoranyiTest, RadialMembership) {
  const BallPoint zeta = BallPoint::Basis(2, 0);
  for (double alpha : {1.5, 2.0, 3.0, 8.0}) {
    const KoranyiRegion region{zeta, alpha};
    const double edge = 2.0 / alpha - 1.0;
    for (double s : {0.01, 0.2, 0.5, 0.9, 0.999}) {
      if (std::abs(s - edge) < 1e-9) continue;
      EXPECT_EQ(RegionContains(region, zeta.Scaled(s)), s > edge) << alpha << " " << s;
    }
  }
  EXPECT_THROW(RegionContains({zeta, 2.0}, zeta), DomainError);
}

TEST(KoranyiTest, WiderApertureContainsNarrower) {
  std::mt19937_64 rng(3);
  const BallPoint zeta = BallPoint::Normalized({1.0, Complex(0.0, 1.0)});
  for (int i = 0; i < 500; ++i) {
    const BallPoint z = RandomInterior(rng, 0.999);
    if (RegionContains({zeta, 2.0}, z)) {
      EXPECT_TRUE(RegionContains({zeta, 4.0}, z));
    }
  }
}

// Property: the Koranyi gauge satisfies the triangle inequality on the sphere.
TEST(KoranyiTest, TriangleInequality) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const BallPoint a = RandomSphere(rng);
    const BallPoint b = RandomSphere(rng);
    const BallPoint c = RandomSphere(rng);
    EXPECT_LE(TriangleResidual(a, b, c), 1e-12);
  }
  EXPECT_NEAR(KoranyiDistance(BallPoint::Basis(2, 0), BallPoint::Basis(2, 1)), 1.0, 1e-15);
}

TEST(KoranyiTest, ComparabilityIsFinite) {
  std::mt19937_64 rng(17);
  const BallPoint zeta = BallPoint::Basis(2, 0);
  const std::vector<BallPoint> cand = RegionCandidates(zeta, 2.0, RegionSampler{});
  int checked = 0;
  for (const BallPoint& psi : cand) {
    if (!RegionContains({zeta, 2.0}, psi)) continue;
    const BallPoint w = RandomInterior(rng, psi.norm());
    const ComparabilityRatios c = ComparabilityCheck(zeta, w, psi, 2.0);
    EXPECT_TRUE(std::isfinite(c.kernel_ratio));
    EXPECT_TRUE(std::isfinite(c.distance_ratio));
    EXPECT_GT(c.distance_ratio, 0.0);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(SphereGridTest, SizeAndBoundary) {
  const auto grid = SphereGrid2(4, 6);
  ASSERT_EQ(grid.size(), 4u * 6u * 6u);
  for (const auto& p : grid) EXPECT_NEAR(p.norm(), 1.0, 1e-15);
}

TEST(TestFunctionTest, NormalizedKernelHasUnitNorm) {
  const KernelSpec h2 = KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic);
  const BallPoint w = BallPoint::Normalized({1.0, 2.0}).Scaled(0.7);
  const TestFunction f = NormalizedKernel(h2, w, "k");
  EXPECT_EQ(f.norm_sq, 1.0);
  const double kww = h2.RealAt(Inner(w, w));
  EXPECT_NEAR(f.abs_value(w), std::sqrt(kww), 1e-12);
}

TEST(TestFunctionTest, EquilibriumPotentialNormIsDoubleSum) {
  const KernelSpec h2 = KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic);
  const std::vector<BallPoint> pts = {BallPoint::Basis(2, 0),
                                      BallPoint::Normalized({1.0, 1.0}),
                                      BallPoint::Normalized({Complex(0.0, 1.0), 0.5})};
  const double r = 0.85;
  const EquilibriumResult eq = SolveEquilibrium(GramianProblem::Build(h2, pts, r));
  const TestFunction f = EquilibriumPotential(h2, pts, eq, r, "u");
  // E at dilation r^2: kernel argument r^4 <p_i, p_j>.
  double e = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      e += eq.weights[i] * eq.weights[j] * h2.RealAt(r * r * r * r * Inner(pts[i], pts[j]));
  EXPECT_NEAR(f.norm_sq, eq.cap_r * eq.cap_r * e, 1e-12);
}

TEST(MaximalTest, ConstantFunction) {
  const BallFunction one = [](const BallPoint&) { return 1.0; };
  RegionSampler sampler;
  sampler.radial = 8;
  sampler.angular = 4;
  sampler.tangential = 2;
  const auto samples = SampledMaximal(one, BallPoint::Basis(2, 1), {2.0, 4.0}, sampler);
  ASSERT_EQ(samples.size(), 2u);
  for (const auto& s : samples) {
    EXPECT_EQ(s.sampled_sup, 1.0);
    EXPECT_GT(s.sample_size, 0);
  }
  WeakTypeOptions opts;
  opts.sampler = sampler;
  opts.grid_levels = {{2, 2}};
  opts.t_fractions = {};
  opts.absolute_t = {2.0};
  const WeakTypeReport rep = WeakTypeExperiment(
      KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic), {{"one", one, 1.0}}, opts);
  ASSERT_FALSE(rep.rows.empty());
  for (const auto& row : rep.rows) {
    EXPECT_EQ(row.superlevel_size, 0);
    EXPECT_EQ(row.ratio, 0.0);
  }
}

}  // namespace
}  // namespace ballcap
