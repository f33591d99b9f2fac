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

#ifndef BALLCAP_BALL_H_
#define BALLCAP_BALL_H_

#include <complex>
#include <initializer_list>
#include <vector>

namespace ballcap {

using Complex = std::complex<double>;

// Points of the closed unit ball in C^d are accepted up to this slack.
inline constexpr double kBallSlack = 1e-12;

// A point of the closed Euclidean unit ball in C^d. The norm is cached at
// construction; construction fails for points outside the ball.
class BallPoint {
 public:
  BallPoint() = default;
  explicit BallPoint(std::vector<Complex> coordinates);
  BallPoint(std::initializer_list<Complex> coordinates);

  static BallPoint Origin(int dimension);
  // The standard basis vector e_k (0-based k).
  static BallPoint Basis(int dimension, int k);
  // Normalizes a nonzero vector onto the sphere.
  static BallPoint Normalized(std::vector<Complex> coordinates);

  int dimension() const { return static_cast<int>(coordinates_.size()); }
  const std::vector<Complex>& coordinates() const { return coordinates_; }
  Complex operator[](int i) const { return coordinates_[i]; }
  double norm() const { return norm_; }
  bool OnBoundary() const;

  // r * z for r in [0, 1].
  BallPoint Scaled(double r) const;
  // lambda * z for a unimodular lambda.
  BallPoint Rotated(Complex lambda) const;

 private:
  std::vector<Complex> coordinates_;
  double norm_ = 0.0;
};

// <z, w> = sum_i z_i conj(w_i).
Complex Inner(const BallPoint& z, const BallPoint& w);

// Applies a d x d matrix (row-major, d*d entries) to z without validating
// the result against the ball. Used for unitary-invariance checks.
BallPoint Apply(const std::vector<Complex>& matrix, const BallPoint& z);

}  // namespace ballcap

#endif  // BALLCAP_BALL_H_
