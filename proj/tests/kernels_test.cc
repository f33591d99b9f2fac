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

#include "ballcap/kernels.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ballcap/errors.h"

namespace ballcap {
namespace {

// Direct partial sums of sum c_n s^n as the oracle for closed forms.
Complex PowerSum(const std::vector<double>& c, Complex s) {
  Complex total = 0.0, power = 1.0;
  for (double a : c) {
    total += a * power;
    power *= s;
  }
  return total;
}

std::vector<double> Coefficients(int n, auto&& a) {
  std::vector<double> c(n);
  for (int k = 0; k < n; ++k) c[k] = a(k);
  return c;
}

const Complex kSamples[] = {{0.0, 0.0}, {0.5, 0.0}, {-0.6, 0.2}, {0.3, -0.7}, {0.0, 0.85}};

TEST(KernelTest, DruryArvesonMatchesGeometricSeries) {
  const KernelSpec spec = KernelSpec::DruryArveson(2, KernelVariant::kHolomorphic);
  const auto c = Coefficients(4000, [](int) { return 1.0; });
  for (Complex s : kSamples) {
    EXPECT_LT(std::abs(spec.At(s).value - PowerSum(c, s)), 1e-12);
    EXPECT_LT(std::abs(spec.RawSeries(s).value - PowerSum(c, s)), 1e-9);
  }
}

TEST(KernelTest, DirichletLogCoefficients) {
  const KernelSpec spec = KernelSpec::DirichletLog(1, KernelVariant::kHolomorphic);
  const auto c = Coefficients(4000, [](int k) { return k == 0 ? 1.0 : 1.0 / k; });
  for (Complex s : kSamples) EXPECT_LT(std::abs(spec.At(s).value - PowerSum(c, s)), 1e-12);
  EXPECT_DOUBLE_EQ(spec.coefficients()(7), 1.0 / 7.0);
}

TEST(KernelTest, WeightedDirichletCoefficientsAreBinomial) {
  const double a = 0.5;
  const KernelSpec spec = KernelSpec::WeightedDirichlet(2, a, KernelVariant::kHolomorphic);
  const auto c = Coefficients(4000, [a](int k) {
    return std::exp(std::lgamma(k + a) - std::lgamma(a) - std::lgamma(k + 1.0));
  });
  for (int k : {0, 1, 2, 10, 100}) EXPECT_NEAR(spec.coefficients()(k), c[k], 1e-13);
  for (Complex s : kSamples) EXPECT_LT(std::abs(spec.At(s).value - PowerSum(c, s)), 1e-10);
}

TEST(KernelTest, HardyPoissonIsTwoSided) {
  const KernelSpec spec = KernelSpec::HardyPoisson(1);
  for (Complex s : kSamples) {
    Complex total = 1.0, power = 1.0;
    for (int k = 1; k < 4000; ++k) {
      power *= s;
      total += power + std::conj(power);
    }
    EXPECT_NEAR(spec.RealAt(s), total.real(), 1e-11);
  }
  EXPECT_DOUBLE_EQ(spec.coefficients()(-3), 1.0);
}

TEST(KernelTest, BoundedFamilyIsGeometricInQ) {
  const KernelSpec spec = KernelSpec::Bounded(2, 0.5, KernelVariant::kHolomorphic);
  EXPECT_DOUBLE_EQ(spec.coefficients()(3), 0.125);
  EXPECT_LT(std::abs(spec.At(Complex(0.9, 0.0)).value - 1.0 / (1.0 - 0.45)), 1e-14);
}

TEST(KernelTest, VariantsApplyToTheRawValue) {
  const KernelSpec holo = KernelSpec::DruryArveson(2, KernelVariant::kHolomorphic);
  for (Complex s : kSamples) {
    const Complex k = 1.0 / (1.0 - s);
    EXPECT_NEAR(holo.WithVariant(KernelVariant::kRealPart).RealAt(s), k.real(), 1e-14);
    EXPECT_NEAR(holo.WithVariant(KernelVariant::kPluriharmonic).RealAt(s), 2.0 * k.real() - 1.0,
                1e-14);
    EXPECT_NEAR(holo.WithVariant(KernelVariant::kModulus).RealAt(s), std::abs(k), 1e-14);
  }
}

TEST(KernelTest, PluriharmonicEffectiveCoefficients) {
  const auto [pos, neg] =
      KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic).EffectiveCoefficients();
  EXPECT_DOUBLE_EQ(pos[0], 1.0);
  EXPECT_DOUBLE_EQ(pos[5], 1.0);
  EXPECT_DOUBLE_EQ(neg[0], 1.0);
  const auto [rpos, rneg] = KernelSpec::DruryArveson(2).EffectiveCoefficients();
  EXPECT_DOUBLE_EQ(rpos[0], 1.0);
  EXPECT_DOUBLE_EQ(rpos[3], 0.5);
  EXPECT_DOUBLE_EQ(rneg[2], 0.5);
  EXPECT_THROW(KernelSpec::DruryArveson(2, KernelVariant::kModulus).EffectiveCoefficients(),
               DomainError);
}

TEST(KernelTest, SeriesRefusesNearTheBoundary) {
  const KernelSpec spec = KernelSpec::DruryArveson(1, KernelVariant::kHolomorphic);
  EXPECT_THROW(spec.RawSeries(Complex(0.99999, 0.0)), DivergenceError);
}

TEST(KernelTest, NamesRoundTrip) {
  for (auto f : {KernelFamily::kDruryArveson, KernelFamily::kDirichletLog,
                 KernelFamily::kWeightedDirichlet, KernelFamily::kHardyPoisson,
                 KernelFamily::kBounded, KernelFamily::kCustom}) {
    EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  }
  for (auto v : {KernelVariant::kHolomorphic, KernelVariant::kRealPart,
                 KernelVariant::kPluriharmonic, KernelVariant::kModulus}) {
    EXPECT_EQ(ParseVariant(VariantName(v)), v);
  }
  EXPECT_THROW(ParseFamily("szego"), DomainError);
}

TEST(KernelTest, CoefficientFileLoads) {
  const CoefficientSequence c = LoadCoefficientFile(BALLCAP_TEST_DATA "/coefficients.txt");
  EXPECT_DOUBLE_EQ(c(0), 1.0);
  EXPECT_DOUBLE_EQ(c(2), 0.25);
  EXPECT_DOUBLE_EQ(c(-1), 0.5);
  EXPECT_DOUBLE_EQ(c(5), 0.0);
  const KernelSpec spec = KernelSpec::Custom(1, c, KernelVariant::kHolomorphic);
  const Complex s(0.3, 0.4);
  EXPECT_LT(std::abs(spec.At(s).value - (1.0 + 0.5 * s + 0.25 * s * s + 0.5 * std::conj(s))),
            1e-15);
  EXPECT_THROW(LoadCoefficientFile("/nonexistent/coefficients.txt"), IoError);
}

// Gramians of real variants with nonnegative coefficients are PSD.
TEST(KernelTest, RealGramiansArePositiveSemidefinite) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 1.0);
  for (const KernelSpec& spec :
       {KernelSpec::DruryArveson(2), KernelSpec::DirichletLog(2),
        KernelSpec::WeightedDirichlet(3, 0.5), KernelSpec::HardyPoisson(1),
        KernelSpec::DruryArveson(2, KernelVariant::kPluriharmonic)}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<BallPoint> pts;
      for (int i = 0; i < 30; ++i) {
        std::vector<Complex> z(spec.dimension());
        for (auto& c : z) c = Complex(g(rng), g(rng));
        pts.push_back(BallPoint::Normalized(z));
      }
      const Eigen::MatrixXd gram =
          spec.variant() == KernelVariant::kHolomorphic
              ? EvalGramian(spec, pts, 0.95).values.real()
              : EvalRealGramian(spec, pts, 0.95);
      EXPECT_TRUE(DiagnoseSpectrum(gram).psd) << spec.Name();
      EXPECT_LT((gram - gram.transpose()).cwiseAbs().maxCoeff(), 1e-13);
    }
  }
}

TEST(KernelTest, HolomorphicGramianIsHermitian) {
  const KernelSpec spec = KernelSpec::DruryArveson(2, KernelVariant::kHolomorphic);
  const std::vector<BallPoint> pts = {BallPoint::Basis(2, 0), BallPoint::Basis(2, 1),
                                      BallPoint::Normalized({Complex(1, 1), Complex(0, 1)})};
  const Gramian g = EvalGramian(spec, pts, 0.8);
  EXPECT_LT((g.values - g.values.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(EvalRealGramian(spec, pts, 0.8), DomainError);
}

TEST(KernelTest, KernelIsUnitarilyInvariant) {
  const KernelSpec spec = KernelSpec::WeightedDirichlet(2, 0.5);
  const double t = 1.1;
  const std::vector<Complex> u = {Complex(std::cos(t), 0), Complex(0, std::sin(t)),
                                  Complex(0, std::sin(t)), Complex(std::cos(t), 0)};
  const BallPoint z({Complex(0.3, -0.2), Complex(0.5, 0.1)});
  const BallPoint w({Complex(-0.4, 0.4), Complex(0.2, 0.3)});
  EXPECT_NEAR(EvalKernel(spec, Apply(u, z), Apply(u, w)).value.real(),
              EvalKernel(spec, z, w).value.real(), 1e-14);
}

}  // namespace
}  // namespace ballcap
