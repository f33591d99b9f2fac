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

#ifndef BALLCAP_POLYNOMIAL_H_
#define BALLCAP_POLYNOMIAL_H_

#include <map>
#include <string>
#include <vector>

#include "ballcap/ball.h"
#include "ballcap/kernels.h"
#include "ballcap/measures.h"

namespace ballcap {

// A holomorphic polynomial sum_alpha c_alpha z^alpha in d variables.
class Polynomial {
 public:
  explicit Polynomial(int d) : dimension_(d) {}

  static Polynomial Constant(int d, Complex c);
  // c * z_{k+1} for 0-based k.
  static Polynomial Coordinate(int d, int k, Complex c = 1.0);
  // Parses sums of terms such as "1 - 2*z1*z2", "0.5*z1^3", "i*z2".
  static Polynomial Parse(const std::string& text, int d);

  int dimension() const { return dimension_; }
  const std::map<MultiIndex, Complex>& terms() const { return terms_; }
  int degree() const;
  bool IsConstant() const { return degree() <= 0; }

  void AddTerm(const MultiIndex& alpha, Complex c);
  Complex operator()(const BallPoint& z) const { return Evaluate(z.coordinates()); }
  Complex Evaluate(const std::vector<Complex>& z) const;
  // Holomorphic partial derivatives at z.
  std::vector<Complex> Gradient(const std::vector<Complex>& z) const;
  // g_r(z) = g(r z).
  Polynomial Dilated(double r) const;
  std::string ToString() const;

 private:
  int dimension_;
  std::map<MultiIndex, Complex> terms_;
};

// ||z^alpha||^2 = alpha! / (|alpha|! a_{|alpha|}); throws UndefinedCoefficient
// when a_{|alpha|} = 0.
double MonomialNormSquared(const KernelSpec& spec, const MultiIndex& alpha);
// ||g||^2 in the holomorphic space of the kernel.
double NormSquared(const KernelSpec& spec, const Polynomial& g);

}  // namespace ballcap

#endif  // BALLCAP_POLYNOMIAL_H_
