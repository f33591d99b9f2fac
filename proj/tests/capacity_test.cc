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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ballcap/energy.h"

namespace ballcap {
namespace {

SimplexQpOptions Tight() {
  SimplexQpOptions o;
  o.relative_tolerance = 1e-13;
  o.absolute_tolerance = 1e-12;
  return o;
}

double Cap(const KernelSpec& spec, const std::vector<BallPoint>& pts, double r) {
  return SolveEquilibrium(GramianProblem::Build(spec, pts, r), Tight()).cap_r;
}

std::vector<double> Dyadic(int k_max) {
  std::vector<double> r;
  for (int k = 1; k <= k_max; ++k) r.push_back(1.0 - std::ldexp(1.0, -k));
  return r;
}

std::vector<BallPoint> RandomBoundary(int d, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<BallPoint> pts;
  for (int i = 0; i < n; ++i) {
    std::vector<Complex> z(d);
    for (auto& c : z) c = Complex(g(rng), g(rng));
    pts.push_back(BallPoint::Normalized(z));
  }
  return pts;
}

TEST(CapacityTest, SinglePointIsReciprocalDiagonal) {
  const BallPoint p = BallPoint::Basis(2, 0);
  for (double r : {0.5, 0.9, 0.99}) {
    EXPECT_NEAR(Cap(KernelSpec::DruryArveson(2), {p}, r), 1.0 - r * r, 1e-15);
    EXPECT_NEAR(Cap(KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic), {p}, r),
                (1.0 - r * r) / (1.0 + r * r), 1e-15);
  }
}

// Two atoms with equal diagonal a and off-diagonal b <= a: cap = 2 / (a + b).
TEST(CapacityTest, TwoPointClosedForm) {
  const KernelSpec spec = KernelSpec::DruryArveson(2);
  const BallPoint p = BallPoint::Basis(2, 0);
  const BallPoint q = BallPoint::Normalized({1.0, Complex(0.0, 1.0)});
  const double r = 0.9;
  const double a = spec.RealAt(r * r), b = spec.RealAt(r * r * Inner(p, q));
  EXPECT_NEAR(Cap(spec, {p, q}, r), 2.0 / (a + b), 1e-14);
}

// Over m-th roots of unity the real-part energy of the uniform measure is
// 1 / (1 - r^{2m}), and the uniform measure is the equilibrium.
TEST(CapacityTest, FlatCircleRootsOfUnity) {
  const KernelSpec spec = KernelSpec::DruryArveson(2);
  for (int m : {4, 16, 64}) {
    const SetDescription set = SetDescription::FlatCircle({1.0, 0.0}, m);
    const double r = 0.95;
    const EquilibriumResult eq =
        SolveEquilibrium(GramianProblem::Build(spec, Discretize(set), r), Tight());
    EXPECT_NEAR(eq.cap_r, 1.0 - std::pow(r, 2 * m), 1e-12);
    EXPECT_NEAR(eq.weights.maxCoeff() * m, 1.0, 1e-6);
    const EquilibriumResult orbit = SolveOrbitEquilibrium(spec, Orbits(set), r, Tight());
    EXPECT_NEAR(orbit.cap_r, eq.cap_r, 1e-12);
    EXPECT_EQ(orbit.weights.size(), m);
  }
}

TEST(CapacityTest, OrbitSolveMatchesFullSolveOnTangentialCircles) {
  const KernelSpec spec = KernelSpec::DruryArveson(2);
  const SetDescription set = SetDescription::TangentialCircle({0.0, 0.5, 1.7}, 16);
  const double r = 0.9;
  EXPECT_NEAR(SolveOrbitEquilibrium(spec, Orbits(set), r, Tight()).cap_r,
              Cap(spec, Discretize(set), r), 1e-11);
}

// Property: monotone in the set and in r, and subadditive.
TEST(CapacityTest, ChoquetPropertiesOnRandomSets) {
  std::mt19937_64 rng(41);
  const KernelSpec spec = KernelSpec::WeightedDirichlet(2, 0.5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = RandomBoundary(2, 6, rng), h = RandomBoundary(2, 5, rng);
    auto g = f;
    g.insert(g.end(), h.begin(), h.end());
    const double r = 0.8;
    EXPECT_LE(Cap(spec, f, r), Cap(spec, g, r) + 1e-12);
    EXPECT_LE(Cap(spec, g, r), Cap(spec, f, r) + Cap(spec, h, r) + 1e-12);
    EXPECT_LE(Cap(spec, g, 0.95), Cap(spec, g, r) + 1e-12);
  }
}

TEST(DualTest, CertificateMatchesPrimal) {
  std::mt19937_64 rng(5);
  for (const KernelSpec& spec : {KernelSpec::DruryArveson(2), KernelSpec::HardyPoisson(1)}) {
    const GramianProblem problem =
        GramianProblem::Build(spec, RandomBoundary(spec.dimension(), 15, rng), 0.9);
    const DualResult dual = SolveDual(problem, Tight());
    const EquilibriumResult eq = SolveEquilibrium(problem, Tight());
    EXPECT_NEAR(dual.duality_product, 1.0, 1e-10);
    EXPECT_NEAR(dual.norm_sq, eq.cap_r, 1e-10);
    EXPECT_GE(dual.min_re_on_F, 1.0 - 1e-10);
    ASSERT_TRUE(dual.nonnegative_qp_value.has_value());
    EXPECT_NEAR(*dual.nonnegative_qp_value, -0.5 * eq.cap_r, 1e-6);
    const DualResult again = DualFromEquilibrium(problem.gramian, eq);
    EXPECT_NEAR(again.norm_sq, dual.norm_sq, 1e-12);
  }
}

TEST(SweepTest, FlatCircleIsPositiveSinglePointIsZero) {
  SweepOptions opts;
  opts.schedule = Dyadic(10);
  opts.solver = Tight();
  // 1 - cap_r = r^{2m} is negligible once m >> 1 / (1 - r).
  const CapacityEstimate flat =
      CapacitySweep(KernelSpec::DruryArveson(2), SetDescription::FlatCircle({1.0, 0.0}, 1 << 16),
                    opts);
  EXPECT_EQ(flat.classification, CapacityClassification::kPositive);
  EXPECT_NEAR(flat.extrapolated_cap, 1.0, 1e-3);
  EXPECT_TRUE(flat.monotonicity.r_monotone);
  opts.schedule = Dyadic(16);
  const CapacityEstimate point = CapacitySweep(
      KernelSpec::DruryArveson(2), SetDescription::FinitePoints({BallPoint::Basis(2, 0)}), opts);
  EXPECT_EQ(point.classification, CapacityClassification::kZero);
  EXPECT_NEAR(point.cap_finest.back(), 1.0 - std::pow(opts.schedule.back(), 2), 1e-12);
  EXPECT_GE(point.extrapolated_cap, 0.0);
}

TEST(SweepTest, ResolutionLadderIsMonotoneWhenNested) {
  SweepOptions opts;
  opts.schedule = Dyadic(8);
  opts.resolutions = {9, 17, 33};
  const SetDescription arc = SetDescription::Arc({1.0}, 0.0, 1.0, 33);
  EXPECT_TRUE(LadderIsNested(arc, opts.resolutions));
  const CapacityEstimate est = CapacitySweep(KernelSpec::HardyPoisson(1), arc, opts);
  EXPECT_TRUE(est.monotonicity.resolution_nested);
  EXPECT_TRUE(est.monotonicity.resolution_monotone);
  EXPECT_TRUE(est.monotonicity.r_monotone);
  EXPECT_LE(est.extrapolated_cap, est.cap_finest.front() + 1e-12);
  EXPECT_FALSE(LadderIsNested(SetDescription::FlatCircle({1.0}, 12), {8, 12}));
  EXPECT_TRUE(LadderIsNested(SetDescription::FlatCircle({1.0}, 32), {8, 16, 32}));
}

TEST(SweepTest, EmptySetIsDegenerate) {
  SweepOptions opts;
  opts.schedule = {0.5, 0.9};
  const CapacityEstimate est =
      CapacitySweep(KernelSpec::DruryArveson(2), SetDescription::FinitePoints({}), opts);
  EXPECT_TRUE(est.degenerate);
  EXPECT_EQ(est.extrapolated_cap, 0.0);
  EXPECT_EQ(est.classification, CapacityClassification::kZero);
}

// The product lift at r and the base arc at r^2 have equal capacities.
TEST(SweepTest, ProductLiftMatchesBaseAtSquaredRadius) {
  const double t1 = 2.0 * M_PI * 0.25;
  const double r = 0.8;
  const SetDescription lift = SetDescription::ProductLift(0.0, t1, 17, 256);
  const double lifted =
      SolveOrbitEquilibrium(KernelSpec::DruryArveson(2), Orbits(lift), r, Tight()).cap_r;
  const double base = Cap(KernelSpec::WeightedDirichlet(1, 0.5),
                          Discretize(SetDescription::Arc({1.0}, 0.0, t1, 17)), r * r);
  EXPECT_NEAR(lifted, base, 0.05 * base);
}

TEST(UnboundednessTest, TermsAreAtLeastOneOnTheSet) {
  const KernelSpec spec = KernelSpec::DruryArveson(2, KernelVariant::kHolomorphic);
  std::vector<double> radii;
  for (int n = 1; n <= 6; ++n) radii.push_back(1.0 - std::pow(4.0, -n));
  UnboundednessOptions opts;
  opts.solver = Tight();
  const UnboundednessFunction f = BuildUnboundednessFunction(
      spec, SetDescription::FinitePoints({BallPoint::Basis(2, 0)}),
      CapacityClassification::kZero, radii, opts);
  ASSERT_EQ(f.terms().size(), radii.size());
  const BallPoint p = BallPoint::Basis(2, 0);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_GE(f.TermAt(n, p).real(), 1.0 - 1e-12);
    EXPECT_NEAR(f.terms()[n - 1].cap, 1.0 - radii[n - 1] * radii[n - 1], 1e-12);
  }
  EXPECT_NEAR(f.PartialSum(6, p).real(), 6.0, 1e-9);
  EXPECT_LE(std::sqrt(f.PartialSumNormSquared(6)), f.NormBudget(6) + 1e-12);
  EXPECT_THROW(BuildUnboundednessFunction(spec, SetDescription::FlatCircle({1.0, 0.0}, 8),
                                          CapacityClassification::kPositive, radii, opts),
               RefusalError);
}

TEST(ZeroSetTest, SamplesLieOnTheZeroSet) {
  ZeroSetOptions opts;
  const Polynomial p = Polynomial::Parse("z1 - z2", 2);
  const ZeroSetSample s = SampleBoundaryZeroSet(p, opts);
  ASSERT_FALSE(s.points.empty());
  for (const auto& z : s.points) {
    EXPECT_TRUE(z.OnBoundary());
    EXPECT_LE(std::abs(p(z)), opts.threshold);
  }
  EXPECT_TRUE(SampleBoundaryZeroSet(Polynomial::Parse("1", 2), opts).degenerate);
}

}  // namespace
}  // namespace ballcap
