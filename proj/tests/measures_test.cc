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

#include "ballcap/measures.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "ballcap/errors.h"

namespace ballcap {
namespace {

constexpr double kPi = 3.14159265358979323846;

double Binomial(int n, int k) {
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

TEST(MeasureTest, NormalizationAndRestriction) {
  const DiscreteMeasure mu({BallPoint::Basis(2, 0), BallPoint::Basis(2, 1)}, {1.0, 3.0});
  EXPECT_DOUBLE_EQ(mu.total_mass(), 4.0);
  EXPECT_FALSE(mu.is_probability());
  EXPECT_TRUE(mu.Normalized().is_probability());
  EXPECT_DOUBLE_EQ(mu.Normalized().weights()[1], 0.75);
  const DiscreteMeasure half = mu.Restricted({false, true});
  EXPECT_EQ(half.size(), 1u);
  EXPECT_DOUBLE_EQ(half.weights()[0], 3.0);
  EXPECT_EQ(mu.Plus(mu.Scaled(2.0)).size(), 4u);
  EXPECT_DOUBLE_EQ(mu.Plus(mu.Scaled(2.0)).total_mass(), 12.0);
}

TEST(MeasureTest, RejectsNegativeWeightsAndMixedDimensions) {
  EXPECT_THROW(DiscreteMeasure({BallPoint::Basis(1, 0)}, {-1.0}), DomainError);
  EXPECT_THROW(DiscreteMeasure({BallPoint::Basis(1, 0), BallPoint::Basis(2, 0)}, {1.0, 1.0}),
               DimensionMismatch);
}

TEST(MultiIndexTest, CountsAreBinomial) {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 6; ++n) {
      EXPECT_DOUBLE_EQ(CountMultiIndices(d, n), Binomial(n + d, d));
      EXPECT_EQ(EnumerateMultiIndices(d, n).size(), static_cast<std::size_t>(Binomial(n + d, d)));
    }
  }
  EXPECT_THROW(EnumerateMultiIndices(6, 40, 1000), CombinatorialCapExceeded);
}

TEST(MultiIndexTest, GradedOrderAndMultinomials) {
  const auto idx = EnumerateMultiIndices(2, 2);
  ASSERT_EQ(idx.size(), 6u);
  EXPECT_EQ(idx.front(), (MultiIndex{0, 0}));
  int previous = 0;
  for (const auto& a : idx) {
    EXPECT_GE(a[0] + a[1], previous);
    previous = a[0] + a[1];
  }
  EXPECT_DOUBLE_EQ(MultinomialWeight({2, 1}), 3.0);
  EXPECT_DOUBLE_EQ(MultinomialWeight({1, 1, 1}), 6.0);
}

TEST(MomentTest, FourthRootsOfUnity) {
  std::vector<BallPoint> roots;
  for (int k = 0; k < 4; ++k) roots.push_back(BallPoint({UnitRoot(k, 4)}));
  const auto moments = Moments(DiscreteMeasure::Uniform(roots), 5);
  for (const auto& m : moments) {
    const int a = m.alpha[0];
    const double expected = (a % 4 == 0) ? 1.0 : 0.0;
    EXPECT_NEAR(std::abs(m.hat_value), expected, 1e-15) << a;
  }
}

TEST(MomentTest, FlatPushforwardKillsSecondCoordinate) {
  std::vector<BallPoint> circle;
  for (int k = 0; k < 7; ++k) circle.push_back(BallPoint({UnitRoot(k, 7)}));
  const DiscreteMeasure flat =
      Pushforward(DiscreteMeasure::Uniform(circle), PushforwardMap::kIotaFlat);
  for (const auto& m : Moments(flat, 4)) {
    if (m.alpha[1] > 0) {
      EXPECT_EQ(std::abs(m.hat_value), 0.0);
    }
  }
}

TEST(MomentTest, HatIsConjugateOfCheck) {
  const DiscreteMeasure mu({BallPoint({Complex(0.3, 0.4), Complex(-0.1, 0.2)})}, {0.7});
  for (const auto& m : Moments(mu, 3)) {
    EXPECT_LT(std::abs(m.hat_value - std::conj(m.check_value)), 1e-16);
  }
}

TEST(SetTest, ArcIncludesEndpoints) {
  const auto pts = Discretize(SetDescription::Arc({1.0}, 0.0, kPi / 2, 5));
  ASSERT_EQ(pts.size(), 5u);
  EXPECT_LT(std::abs(pts.front()[0] - Complex(1.0, 0.0)), 1e-15);
  EXPECT_LT(std::abs(pts.back()[0] - Complex(0.0, 1.0)), 1e-15);
}

TEST(SetTest, FlatCircleIsRootsOfUnity) {
  const auto pts = Discretize(SetDescription::FlatCircle({1.0, 0.0}, 8));
  ASSERT_EQ(pts.size(), 8u);
  EXPECT_EQ(pts[2][0], Complex(0.0, 1.0));
  EXPECT_EQ(pts[4][0], Complex(-1.0, 0.0));
  for (const auto& p : pts) EXPECT_EQ(p[1], Complex(0.0, 0.0));
}

TEST(SetTest, UnitRootIsExactAtQuarterTurns) {
  EXPECT_EQ(UnitRoot(1, 4), Complex(0.0, 1.0));
  EXPECT_EQ(UnitRoot(-1, 4), Complex(0.0, -1.0));
  EXPECT_EQ(UnitRoot(6, 4), Complex(-1.0, 0.0));
  EXPECT_NEAR(std::arg(UnitRoot(1, 12)), kPi / 6, 1e-15);
}

TEST(SetTest, TangentialCircleIsTheTangentialPushforward) {
  const int m = 16;
  std::vector<BallPoint> torus;
  for (int k = 0; k < m; ++k) torus.push_back(TorusPoint(UnitRoot(k, m), 1.0));
  const DiscreteMeasure pushed =
      Pushforward(DiscreteMeasure::Uniform(torus), PushforwardMap::kHTangential);
  const auto set = Discretize(SetDescription::TangentialCircle({0.0}, m));
  ASSERT_EQ(set.size(), pushed.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    EXPECT_LT(std::abs(Inner(set[i], pushed.atoms()[i]) - 1.0), 1e-14);
    EXPECT_TRUE(set[i].OnBoundary());
  }
}

TEST(SetTest, ProductMapHalvesTheTorus) {
  const DiscreteMeasure mu({TorusPoint(UnitRoot(1, 8), UnitRoot(3, 8))}, {1.0});
  const DiscreteMeasure image = Pushforward(mu, PushforwardMap::kRProduct);
  EXPECT_LT(std::abs(image.atoms()[0][0] - UnitRoot(4, 8)), 1e-15);
}

TEST(SetTest, OrbitExpansionMatchesDiscretize) {
  const std::vector<SetDescription> sets = {
      SetDescription::FlatCircle({0.6, Complex(0.0, 0.8)}, 12),
      SetDescription::TangentialCircle({0.0, 1.0}, 9),
      SetDescription::ProductLift(0.0, 1.0, 5, 7),
      SetDescription::OrbitUnion({BallPoint::Normalized({1.0, Complex(0.0, 1.0)})}, {1, 2}, 6)};
  for (const auto& s : sets) {
    ASSERT_TRUE(HasOrbitStructure(s));
    const auto expanded = Orbits(s).Expand();
    const auto direct = Discretize(s);
    ASSERT_EQ(expanded.size(), direct.size()) << SetKindName(s.kind);
    for (std::size_t i = 0; i < direct.size(); ++i) {
      for (int c = 0; c < direct[i].dimension(); ++c) {
        EXPECT_LT(std::abs(expanded[i][c] - direct[i][c]), 1e-14);
      }
    }
  }
  EXPECT_FALSE(HasOrbitStructure(SetDescription::Arc({1.0}, 0.0, 1.0, 4)));
}

TEST(SetTest, KindNamesRoundTrip) {
  for (auto k : {SetKind::kFinitePoints, SetKind::kArc, SetKind::kFlatCircle,
                 SetKind::kTangentialCircle, SetKind::kProductLift, SetKind::kOrbitUnion}) {
    EXPECT_EQ(ParseSetKind(SetKindName(k)), k);
  }
  EXPECT_THROW(ParseSetKind("cantor"), DomainError);
}

TEST(MeasureCsvTest, RoundTripsAtFullPrecision) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::vector<BallPoint> atoms;
  std::vector<double> w;
  for (int i = 0; i < 20; ++i) {
    atoms.push_back(BallPoint({Complex(u(rng), u(rng)), Complex(u(rng), u(rng))}));
    w.push_back(u(rng) + 0.5);
  }
  const DiscreteMeasure mu(atoms, w);
  const auto path = std::filesystem::temp_directory_path() / "ballcap_measure_test.csv";
  WriteMeasureCsv(mu, path.string());
  const DiscreteMeasure back = ReadMeasureCsv(path.string());
  std::filesystem::remove(path);
  ASSERT_EQ(back.size(), mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    EXPECT_EQ(back.weights()[i], mu.weights()[i]);
    EXPECT_EQ(back.atoms()[i][1], mu.atoms()[i][1]);
  }
  EXPECT_THROW(ReadMeasureCsv("/nonexistent/m.csv"), IoError);
}

}  // namespace
}  // namespace ballcap
