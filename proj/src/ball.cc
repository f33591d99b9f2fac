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
#include <string>
#include <utility>

#include "ballcap/errors.h"

namespace ballcap {

namespace {

double EuclideanNorm(const std::vector<Complex>& v) {
  double sum = 0.0;
  for (const Complex& c : v) sum += std::norm(c);
  return std::sqrt(sum);
}

}  // namespace

BallPoint::BallPoint(std::vector<Complex> coordinates)
    : coordinates_(std::move(coordinates)), norm_(EuclideanNorm(coordinates_)) {
  if (coordinates_.empty()) throw DomainError("BallPoint needs d >= 1");
  if (norm_ > 1.0 + kBallSlack) {
    throw DomainError("point outside the closed unit ball (norm " +
                      std::to_string(norm_) + ")");
  }
}

BallPoint::BallPoint(std::initializer_list<Complex> coordinates)
    : BallPoint(std::vector<Complex>(coordinates)) {}

BallPoint BallPoint::Origin(int dimension) {
  return BallPoint(std::vector<Complex>(dimension, 0.0));
}

BallPoint BallPoint::Basis(int dimension, int k) {
  std::vector<Complex> v(dimension, 0.0);
  v.at(k) = 1.0;
  return BallPoint(std::move(v));
}

BallPoint BallPoint::Normalized(std::vector<Complex> coordinates) {
  const double n = EuclideanNorm(coordinates);
  if (n == 0.0) throw DomainError("cannot normalize the zero vector");
  for (Complex& c : coordinates) c /= n;
  return BallPoint(std::move(coordinates));
}

bool BallPoint::OnBoundary() const { return std::abs(norm_ - 1.0) <= kBallSlack; }

BallPoint BallPoint::Scaled(double r) const {
  if (r < 0.0 || r > 1.0) throw DomainError("scale factor outside [0, 1]");
  BallPoint out;
  out.coordinates_ = coordinates_;
  for (Complex& c : out.coordinates_) c *= r;
  out.norm_ = norm_ * r;
  return out;
}

BallPoint BallPoint::Rotated(Complex lambda) const {
  BallPoint out;
  out.coordinates_ = coordinates_;
  for (Complex& c : out.coordinates_) c *= lambda;
  out.norm_ = EuclideanNorm(out.coordinates_);
  return out;
}

Complex Inner(const BallPoint& z, const BallPoint& w) {
  if (z.dimension() != w.dimension()) {
    throw DimensionMismatch("inner product of points in C^" +
                            std::to_string(z.dimension()) + " and C^" +
                            std::to_string(w.dimension()));
  }
  Complex s = 0.0;
  for (int i = 0; i < z.dimension(); ++i) s += z[i] * std::conj(w[i]);
  return s;
}

BallPoint Apply(const std::vector<Complex>& matrix, const BallPoint& z) {
  const int d = z.dimension();
  if (static_cast<int>(matrix.size()) != d * d) {
    throw DimensionMismatch("matrix size does not match point dimension");
  }
  std::vector<Complex> out(d, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out[i] += matrix[i * d + j] * z[j];
  }
  return BallPoint(std::move(out));
}

}  // namespace ballcap
