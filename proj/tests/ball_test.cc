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

#include "ballcap/ball.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ballcap/errors.h"

namespace ballcap {
namespace {

TEST(BallPointTest, RejectsPointsOutsideTheBall) {
  EXPECT_THROW(BallPoint({Complex(1.0, 0.0), Complex(0.1, 0.0)}), DomainError);
  EXPECT_NO_THROW(BallPoint({Complex(1.0 + 5e-13, 0.0)}));
}

TEST(BallPointTest, BoundaryAndOrigin) {
  EXPECT_TRUE(BallPoint::Basis(3, 2).OnBoundary());
  EXPECT_FALSE(BallPoint::Origin(2).OnBoundary());
  EXPECT_EQ(BallPoint::Origin(4).norm(), 0.0);
  EXPECT_EQ(BallPoint::Basis(3, 1)[1], Complex(1.0, 0.0));
}

TEST(BallPointTest, NormalizedLandsOnSphere) {
  const BallPoint p = BallPoint::Normalized({Complex(3.0, 4.0), Complex(0.0, 12.0)});
  EXPECT_NEAR(p.norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(p[0]), 5.0 / 13.0, 1e-15);
  EXPECT_THROW(BallPoint::Normalized({Complex(0.0, 0.0)}), DomainError);
}

TEST(BallPointTest, InnerProductIsConjugateLinearInSecondSlot) {
  const BallPoint z({Complex(0.3, 0.1), Complex(-0.2, 0.4)});
  const BallPoint w({Complex(0.1, -0.5), Complex(0.2, 0.2)});
  const Complex lambda = std::polar(1.0, 0.7);
  EXPECT_LT(std::abs(Inner(z, w.Rotated(lambda)) - std::conj(lambda) * Inner(z, w)), 1e-15);
  EXPECT_LT(std::abs(Inner(z, w) - std::conj(Inner(w, z))), 1e-15);
  EXPECT_NEAR(Inner(z, z).real(), z.norm() * z.norm(), 1e-15);
}

TEST(BallPointTest, ScaledAndRotated) {
  const BallPoint p = BallPoint::Basis(2, 0).Scaled(0.5);
  EXPECT_DOUBLE_EQ(p.norm(), 0.5);
  EXPECT_THROW(p.Scaled(1.5), DomainError);
  EXPECT_NEAR(p.Rotated(Complex(0.0, 1.0))[0].imag(), 0.5, 1e-16);
}

TEST(BallPointTest, UnitaryPreservesInnerProducts) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  const double t = 0.9;
  const std::vector<Complex> rotation = {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
  for (int trial = 0; trial < 50; ++trial) {
    const BallPoint z({Complex(u(rng), u(rng)), Complex(u(rng), u(rng))});
    const BallPoint w({Complex(u(rng), u(rng)), Complex(u(rng), u(rng))});
    EXPECT_LT(std::abs(Inner(Apply(rotation, z), Apply(rotation, w)) - Inner(z, w)), 1e-15);
  }
}

}  // namespace
}  // namespace ballcap
