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

#include "ballcap/polynomial.h"

#include <cmath>

#include <gtest/gtest.h>

#include "ballcap/errors.h"

namespace ballcap {
namespace {

TEST(PolynomialTest, ParsesAndEvaluates) {
  const Polynomial p = Polynomial::Parse("1 - 2*z1*z2", 2);
  EXPECT_EQ(p.degree(), 2);
  const std::vector<Complex> z = {Complex(0.5, 0.5), Complex(0.5, -0.5)};
  EXPECT_LT(std::abs(p.Evaluate(z) - (1.0 - 2.0 * z[0] * z[1])), 1e-15);
  const Polynomial q = Polynomial::Parse("0.5*z1^3 + i*z2", 2);
  EXPECT_LT(std::abs(q.Evaluate(z) - (0.5 * std::pow(z[0], 3) + Complex(0, 1) * z[1])), 1e-15);
  EXPECT_TRUE(Polynomial::Parse("3", 2).IsConstant());
  EXPECT_THROW(Polynomial::Parse("z3", 2), Error);
  EXPECT_THROW(Polynomial::Parse("1 +* z1", 2), Error);
}

TEST(PolynomialTest, GradientMatchesFiniteDifferences) {
  const Polynomial p = Polynomial::Parse("z1^2*z2 - 3*z2^2 + z1", 2);
  const std::vector<Complex> z = {Complex(0.2, 0.1), Complex(-0.3, 0.4)};
  const auto g = p.Gradient(z);
  const double h = 1e-6;
  for (int k = 0; k < 2; ++k) {
    auto zp = z, zm = z;
    zp[k] += h;
    zm[k] -= h;
    EXPECT_LT(std::abs((p.Evaluate(zp) - p.Evaluate(zm)) / (2 * h) - g[k]), 1e-8);
  }
}

TEST(PolynomialTest, DilationScalesByDegree) {
  const Polynomial p = Polynomial::Parse("z1^2 + z2", 2);
  const std::vector<Complex> z = {Complex(0.7, 0.0), Complex(0.0, 0.3)};
  const std::vector<Complex> rz = {0.5 * z[0], 0.5 * z[1]};
  EXPECT_LT(std::abs(p.Dilated(0.5).Evaluate(z) - p.Evaluate(rz)), 1e-15);
}

// ||z^alpha||^2 = alpha! / |alpha|! for the Drury-Arveson kernel.
TEST(PolynomialTest, DruryArvesonMonomialNorms) {
  const KernelSpec da = KernelSpec::DruryArveson(2, KernelVariant::kHolomorphic);
  EXPECT_DOUBLE_EQ(MonomialNormSquared(da, {1, 1}), 0.5);
  EXPECT_DOUBLE_EQ(MonomialNormSquared(da, {2, 1}), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(MonomialNormSquared(da, {3, 0}), 1.0);
  EXPECT_DOUBLE_EQ(NormSquared(da, Polynomial::Parse("1 - 2*z1*z2", 2)), 1.0 + 4.0 * 0.5);
}

TEST(PolynomialTest, MissingCoefficientHasNoNorm) {
  const KernelSpec custom =
      KernelSpec::Custom(1, CoefficientSequence({1.0, 0.0, 1.0}, {}), KernelVariant::kHolomorphic);
  EXPECT_THROW(MonomialNormSquared(custom, {1}), UndefinedCoefficient);
}

}  // namespace
}  // namespace ballcap
