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

#ifndef BALLCAP_KERNELS_H_
#define BALLCAP_KERNELS_H_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ballcap/ball.h"

namespace ballcap {

// The two-sided coefficient sequence (a_n) of a unitarily invariant kernel
//   K(z, w) = sum_{n>=0} a_n <z,w>^n + sum_{n>=1} a_{-n} conj(<z,w>)^n.
// a_0 = 1 and every coefficient is nonnegative.
class CoefficientSequence {
 public:
  static constexpr int kDefaultTruncation = 4096;

  // positive = (a_0, a_1, ...), negative = (a_{-1}, a_{-2}, ...). Entries past
  // the end of either list are zero.
  CoefficientSequence(std::vector<double> positive, std::vector<double> negative,
                      int truncation_degree = kDefaultTruncation);

  // a_n for any integer n.
  double operator()(long n) const;
  const std::vector<double>& positive_part() const { return positive_; }
  const std::vector<double>& negative_part() const { return negative_; }
  int truncation_degree() const { return truncation_; }

  // Bound on sum_{n>N} a_{+-n} rho^n for the tail past the cutoff N, using
  // a_{N+1} and the coefficient ratio bound past N.
  double TailBound(double rho) const;

  // Optional analytic continuation of the coefficients past the stored
  // lists: a_{N+1} and sup_{n>N} a_{n+1}/a_n for each side. Families with
  // infinitely many nonzero coefficients set these.
  void SetTailModel(double next_positive, double ratio_positive,
                    double next_negative, double ratio_negative);

 private:
  std::vector<double> positive_;
  std::vector<double> negative_;
  int truncation_;
  double next_pos_ = 0.0, ratio_pos_ = 0.0;
  double next_neg_ = 0.0, ratio_neg_ = 0.0;
};

// Reads a two-column text file "index value" (one coefficient per line,
// '#' starts a comment). Negative indices address a_{-n}.
CoefficientSequence LoadCoefficientFile(const std::string& path,
                                        int truncation_degree =
                                            CoefficientSequence::kDefaultTruncation);

enum class KernelVariant {
  kHolomorphic,    // K
  kRealPart,       // Re K
  kPluriharmonic,  // 2 Re K - 1
  kModulus,        // |K|
};

enum class KernelFamily {
  kDruryArveson,       // 1 / (1 - s)
  kDirichletLog,       // log(e / (1 - s))
  kWeightedDirichlet,  // (1 - s)^{-a}
  kHardyPoisson,       // (1 - |s|^2) / |1 - s|^2, a_n = a_{-n} = 1
  kBounded,            // 1 / (1 - q s)
  kCustom,
};

std::string FamilyName(KernelFamily family);
KernelFamily ParseFamily(const std::string& name);
std::string VariantName(KernelVariant variant);
KernelVariant ParseVariant(const std::string& name);

struct KernelValue {
  Complex value;
  double truncation_error = 0.0;
};

class KernelSpec {
 public:
  static KernelSpec DruryArveson(int d, KernelVariant v = KernelVariant::kRealPart);
  static KernelSpec DirichletLog(int d, KernelVariant v = KernelVariant::kRealPart);
  static KernelSpec WeightedDirichlet(int d, double a,
                                      KernelVariant v = KernelVariant::kRealPart);
  static KernelSpec HardyPoisson(int d);
  static KernelSpec Bounded(int d, double q, KernelVariant v = KernelVariant::kRealPart);
  static KernelSpec Custom(int d, CoefficientSequence coefficients,
                           KernelVariant v = KernelVariant::kRealPart);
  // Builds a tagged family from its name and optional parameter.
  static KernelSpec FromName(const std::string& family, int d, KernelVariant v,
                             double parameter = 0.0,
                             int truncation = CoefficientSequence::kDefaultTruncation);

  int dimension() const { return dimension_; }
  KernelFamily family() const { return family_; }
  double parameter() const { return parameter_; }
  KernelVariant variant() const { return variant_; }
  const CoefficientSequence& coefficients() const { return coefficients_; }
  bool has_closed_form() const { return family_ != KernelFamily::kCustom; }
  bool is_real() const { return variant_ != KernelVariant::kHolomorphic; }
  std::string Name() const;

  KernelSpec WithVariant(KernelVariant v) const;
  KernelSpec WithSeriesTolerance(double tolerance) const;
  double series_tolerance() const { return series_tolerance_; }

  // Kernel as a function of s = <z, w>, before the variant is applied.
  // Closed-form families bypass the series.
  KernelValue Raw(Complex s) const;
  // Always sums the truncated series; throws DivergenceError when the tail
  // bound exceeds the series tolerance.
  KernelValue RawSeries(Complex s) const;
  // Variant applied: complex for kHolomorphic, real-valued otherwise.
  KernelValue At(Complex s) const;
  // Real value for real variants. For the holomorphic variant returns Re K.
  double RealAt(Complex s) const { return At(s).value.real(); }

  // Coefficients of the variant-adjusted kernel as a two-sided sequence
  // (b_n, b_{-n}); throws DomainError for kModulus, which is not a series.
  std::pair<std::vector<double>, std::vector<double>> EffectiveCoefficients() const;

 private:
  KernelSpec(int d, KernelFamily family, double parameter,
             CoefficientSequence coefficients, KernelVariant v);
  Complex ClosedForm(Complex s) const;

  int dimension_;
  KernelFamily family_;
  double parameter_;
  CoefficientSequence coefficients_;
  KernelVariant variant_;
  double series_tolerance_ = 1e-10;
};

// k(z, w) for this kernel's variant.
KernelValue EvalKernel(const KernelSpec& spec, const BallPoint& z, const BallPoint& w);

// G[i][j] = k(r p_i, r p_j).
struct Gramian {
  Eigen::MatrixXcd values;
  double max_truncation_error = 0.0;
};
Gramian EvalGramian(const KernelSpec& spec, const std::vector<BallPoint>& points,
                    double r, int threads = 1);
// Real symmetric Gramian for real variants; throws DomainError for kHolomorphic.
Eigen::MatrixXd EvalRealGramian(const KernelSpec& spec,
                                const std::vector<BallPoint>& points, double r,
                                int threads = 1);

struct SpectrumDiagnostics {
  double min_eigenvalue = 0.0;
  double max_abs_entry = 0.0;
  double spectral_norm = 0.0;
  // min_eigenvalue >= -relative_floor * spectral_norm
  bool psd = true;
};
SpectrumDiagnostics DiagnoseSpectrum(const Eigen::MatrixXd& gramian,
                                     double relative_floor = 1e-9);

}  // namespace ballcap

#endif  // BALLCAP_KERNELS_H_
