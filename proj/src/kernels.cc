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
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "ballcap/errors.h"
#include "ballcap/parallel.h"

namespace ballcap {

namespace {


void ValidateNonnegative(const std::vector<double>& v, const char* side) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] >= 0.0) || !std::isfinite(v[i])) {
      throw DomainError(std::string("kernel coefficient on the ") + side +
                        " side at index " + std::to_string(i) +
                        " must be a finite nonnegative number");
    }
  }
}

// Stores a_0..a_N of a family and models the tail past N.
CoefficientSequence FamilyCoefficients(KernelFamily family, double parameter,
                                       int truncation) {
  const int n_max = truncation;
  std::vector<double> pos(n_max + 1), neg;
  double next = 0.0, ratio = 0.0;
  switch (family) {
    case KernelFamily::kDruryArveson:
      std::fill(pos.begin(), pos.end(), 1.0);
      next = 1.0;
      ratio = 1.0;
      break;
    case KernelFamily::kHardyPoisson:
      std::fill(pos.begin(), pos.end(), 1.0);
      neg.assign(n_max, 1.0);
      next = 1.0;
      ratio = 1.0;
      break;
    case KernelFamily::kDirichletLog:
      pos[0] = 1.0;
      for (int n = 1; n <= n_max; ++n) pos[n] = 1.0 / n;
      next = 1.0 / (n_max + 1);
      ratio = 1.0;
      break;
    case KernelFamily::kWeightedDirichlet: {
      // a_n = Gamma(n + a) / (Gamma(a) n!), generated by the ratio (n-1+a)/n.
      const double a = parameter;
      pos[0] = 1.0;
      for (int n = 1; n <= n_max; ++n) pos[n] = pos[n - 1] * (n - 1 + a) / n;
      next = pos[n_max] * (n_max + a) / (n_max + 1);
      // (n + a) / (n + 1) is monotone in n; its sup past N is at N+1 when
      // a > 1 and tends to 1 otherwise.
      ratio = a > 1.0 ? (n_max + 1 + a) / (n_max + 2) : 1.0;
      break;
    }
    case KernelFamily::kBounded: {
      const double q = parameter;
      pos[0] = 1.0;
      for (int n = 1; n <= n_max; ++n) pos[n] = pos[n - 1] * q;
      next = pos[n_max] * q;
      ratio = q;
      break;
    }
    case KernelFamily::kCustom:
      throw DomainError("custom kernels carry their own coefficients");
  }
  CoefficientSequence seq(std::move(pos), std::move(neg), truncation);
  const bool two_sided = family == KernelFamily::kHardyPoisson;
  seq.SetTailModel(next, ratio, two_sided ? next : 0.0, two_sided ? ratio : 0.0);
  return seq;
}

double GeometricTail(double first, double ratio, double rho, int cutoff) {
  if (first == 0.0) return 0.0;
  const double q = ratio * rho;
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return first * std::pow(rho, cutoff + 1) / (1.0 - q);
}

// Exact sum of stored coefficients past the cutoff plus the modelled tail.
double SideTail(const std::vector<double>& coeffs, int first_index, int cutoff,
                double next, double ratio, double rho) {
  double tail = 0.0;
  // coeffs[k] holds the coefficient of index first_index + k.
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const long n = first_index + static_cast<long>(k);
    if (n > cutoff) tail += coeffs[k] * std::pow(rho, static_cast<double>(n));
  }
  return tail + GeometricTail(next, ratio, rho, cutoff);
}

}  // namespace

CoefficientSequence::CoefficientSequence(std::vector<double> positive,
                                         std::vector<double> negative,
                                         int truncation_degree)
    : positive_(std::move(positive)),
      negative_(std::move(negative)),
      truncation_(truncation_degree) {
  if (truncation_ < 1) throw DomainError("truncation degree must be positive");
  if (positive_.empty() || std::abs(positive_[0] - 1.0) > 1e-15) {
    throw DomainError("kernel coefficients must satisfy a_0 = 1");
  }
  ValidateNonnegative(positive_, "positive");
  ValidateNonnegative(negative_, "negative");
}

double CoefficientSequence::operator()(long n) const {
  if (n >= 0) {
    return n < static_cast<long>(positive_.size()) ? positive_[n] : 0.0;
  }
  const long k = -n - 1;
  return k < static_cast<long>(negative_.size()) ? negative_[k] : 0.0;
}

void CoefficientSequence::SetTailModel(double next_positive, double ratio_positive,
                                       double next_negative, double ratio_negative) {
  next_pos_ = next_positive;
  ratio_pos_ = ratio_positive;
  next_neg_ = next_negative;
  ratio_neg_ = ratio_negative;
}

double CoefficientSequence::TailBound(double rho) const {
  return SideTail(positive_, 0, truncation_, next_pos_, ratio_pos_, rho) +
         SideTail(negative_, 1, truncation_, next_neg_, ratio_neg_, rho);
}

CoefficientSequence LoadCoefficientFile(const std::string& path,
                                        int truncation_degree) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open coefficient file " + path);
  std::map<long, double> entries;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long index;
    double value;
    if (!(fields >> index)) continue;
    if (!(fields >> value)) {
      throw IoError(path + ":" + std::to_string(line_number) +
                    ": expected 'index value'");
    }
    if (entries.count(index)) {
      throw IoError(path + ":" + std::to_string(line_number) + ": duplicate index " +
                    std::to_string(index));
    }
    entries[index] = value;
  }
  if (!entries.count(0)) entries[0] = 1.0;
  long max_pos = 0, max_neg = 0;
  for (const auto& [n, v] : entries) {
    if (n > max_pos) max_pos = n;
    if (-n > max_neg) max_neg = -n;
  }
  std::vector<double> pos(max_pos + 1, 0.0), neg(max_neg, 0.0);
  for (const auto& [n, v] : entries) {
    if (n >= 0) {
      pos[n] = v;
    } else {
      neg[-n - 1] = v;
    }
  }
  return CoefficientSequence(std::move(pos), std::move(neg), truncation_degree);
}

std::string FamilyName(KernelFamily family) {
  switch (family) {
    case KernelFamily::kDruryArveson: return "drury-arveson";
    case KernelFamily::kDirichletLog: return "dirichlet-log";
    case KernelFamily::kWeightedDirichlet: return "weighted-dirichlet";
    case KernelFamily::kHardyPoisson: return "hardy-poisson";
    case KernelFamily::kBounded: return "bounded";
    case KernelFamily::kCustom: return "custom";
  }
  return "unknown";
}

KernelFamily ParseFamily(const std::string& name) {
  for (KernelFamily f :
       {KernelFamily::kDruryArveson, KernelFamily::kDirichletLog,
        KernelFamily::kWeightedDirichlet, KernelFamily::kHardyPoisson,
        KernelFamily::kBounded, KernelFamily::kCustom}) {
    if (FamilyName(f) == name) return f;
  }
  throw DomainError("unknown kernel family '" + name + "'");
}

std::string VariantName(KernelVariant variant) {
  switch (variant) {
    case KernelVariant::kHolomorphic: return "holomorphic";
    case KernelVariant::kRealPart: return "real";
    case KernelVariant::kPluriharmonic: return "pluriharmonic";
    case KernelVariant::kModulus: return "modulus";
  }
  return "unknown";
}

KernelVariant ParseVariant(const std::string& name) {
  for (KernelVariant v : {KernelVariant::kHolomorphic, KernelVariant::kRealPart,
                          KernelVariant::kPluriharmonic, KernelVariant::kModulus}) {
    if (VariantName(v) == name) return v;
  }
  throw DomainError("unknown kernel variant '" + name + "'");
}

KernelSpec::KernelSpec(int d, KernelFamily family, double parameter,
                       CoefficientSequence coefficients, KernelVariant v)
    : dimension_(d),
      family_(family),
      parameter_(parameter),
      coefficients_(std::move(coefficients)),
      variant_(v) {
  if (d < 1) throw DomainError("kernel dimension must be >= 1");
}

KernelSpec KernelSpec::DruryArveson(int d, KernelVariant v) {
  return KernelSpec(d, KernelFamily::kDruryArveson, 0.0,
                    FamilyCoefficients(KernelFamily::kDruryArveson, 0.0,
                                       CoefficientSequence::kDefaultTruncation),
                    v);
}

KernelSpec KernelSpec::DirichletLog(int d, KernelVariant v) {
  return FromName("dirichlet-log", d, v);
}

KernelSpec KernelSpec::WeightedDirichlet(int d, double a, KernelVariant v) {
  return FromName("weighted-dirichlet", d, v, a);
}

KernelSpec KernelSpec::HardyPoisson(int d) {
  return FromName("hardy-poisson", d, KernelVariant::kHolomorphic);
}

KernelSpec KernelSpec::Bounded(int d, double q, KernelVariant v) {
  return FromName("bounded", d, v, q);
}

KernelSpec KernelSpec::Custom(int d, CoefficientSequence coefficients, KernelVariant v) {
  return KernelSpec(d, KernelFamily::kCustom, 0.0, std::move(coefficients), v);
}

KernelSpec KernelSpec::FromName(const std::string& family, int d, KernelVariant v,
                                double parameter, int truncation) {
  const KernelFamily f = ParseFamily(family);
  if (f == KernelFamily::kCustom) {
    throw DomainError("custom kernels need a coefficient sequence");
  }
  if (f == KernelFamily::kWeightedDirichlet && !(parameter > 0.0)) {
    throw DomainError("weighted-dirichlet needs a parameter a > 0");
  }
  if (f == KernelFamily::kBounded && !(parameter > 0.0 && parameter < 1.0)) {
    throw DomainError("bounded family needs 0 < q < 1");
  }
  return KernelSpec(d, f, parameter, FamilyCoefficients(f, parameter, truncation), v);
}

std::string KernelSpec::Name() const {
  std::ostringstream out;
  out << FamilyName(family_);
  if (family_ == KernelFamily::kWeightedDirichlet || family_ == KernelFamily::kBounded) {
    out << "(" << parameter_ << ")";
  }
  out << "/" << VariantName(variant_) << "/d=" << dimension_;
  return out.str();
}

KernelSpec KernelSpec::WithVariant(KernelVariant v) const {
  KernelSpec copy = *this;
  copy.variant_ = v;
  return copy;
}

KernelSpec KernelSpec::WithSeriesTolerance(double tolerance) const {
  KernelSpec copy = *this;
  copy.series_tolerance_ = tolerance;
  return copy;
}

Complex KernelSpec::ClosedForm(Complex s) const {
  const Complex one_minus = 1.0 - s;
  if (std::abs(one_minus) == 0.0 && family_ != KernelFamily::kBounded) {
    throw DivergenceError("kernel evaluated at <z,w> = 1",
                          std::numeric_limits<double>::infinity());
  }
  switch (family_) {
    case KernelFamily::kDruryArveson:
      return 1.0 / one_minus;
    case KernelFamily::kWeightedDirichlet:
      // Principal branch; Re(1 - s) > 0 on the ball.
      return std::exp(-parameter_ * std::log(one_minus));
    case KernelFamily::kDirichletLog:
      return 1.0 - std::log(one_minus);
    case KernelFamily::kHardyPoisson: {
      const double m = std::abs(s);
      return (1.0 - m) * (1.0 + m) / std::norm(one_minus);
    }
    case KernelFamily::kBounded:
      return 1.0 / (1.0 - parameter_ * s);
    case KernelFamily::kCustom:
      break;
  }
  throw DomainError("no closed form for custom kernels");
}

KernelValue KernelSpec::RawSeries(Complex s) const {
  const double rho = std::abs(s);
  const double tail = coefficients_.TailBound(rho);
  const int n_max = coefficients_.truncation_degree();
  const auto& pos = coefficients_.positive_part();
  const auto& neg = coefficients_.negative_part();
  Complex sum = 0.0;
  Complex power = 1.0;
  const int pos_end = std::min<int>(n_max, static_cast<int>(pos.size()) - 1);
  const int neg_end = std::min<int>(n_max, static_cast<int>(neg.size()));
  const int end = std::max(pos_end, neg_end);
  for (int n = 0; n <= end; ++n) {
    if (n <= pos_end) sum += pos[n] * power;
    if (n >= 1 && n <= neg_end) sum += neg[n - 1] * std::conj(power);
    power *= s;
  }
  if (!(tail <= series_tolerance_ * std::max(1.0, std::abs(sum)))) {
    throw DivergenceError("kernel series tail bound " + std::to_string(tail) +
                              " exceeds tolerance at |<z,w>| = " + std::to_string(rho),
                          tail);
  }
  return {sum, tail};
}

KernelValue KernelSpec::Raw(Complex s) const {
  if (has_closed_form()) return {ClosedForm(s), 0.0};
  return RawSeries(s);
}

KernelValue KernelSpec::At(Complex s) const {
  KernelValue raw = Raw(s);
  switch (variant_) {
    case KernelVariant::kHolomorphic:
      return raw;
    case KernelVariant::kRealPart:
      return {raw.value.real(), raw.truncation_error};
    case KernelVariant::kPluriharmonic:
      return {2.0 * raw.value.real() - 1.0, 2.0 * raw.truncation_error};
    case KernelVariant::kModulus:
      return {std::abs(raw.value), raw.truncation_error};
  }
  return raw;
}

std::pair<std::vector<double>, std::vector<double>> KernelSpec::EffectiveCoefficients()
    const {
  const auto& pos = coefficients_.positive_part();
  const auto& neg = coefficients_.negative_part();
  const int n_max = coefficients_.truncation_degree();
  switch (variant_) {
    case KernelVariant::kHolomorphic: {
      std::vector<double> p(pos.begin(),
                            pos.begin() + std::min<std::size_t>(pos.size(), n_max + 1));
      std::vector<double> q(neg.begin(),
                            neg.begin() + std::min<std::size_t>(neg.size(), n_max));
      return {p, q};
    }
    case KernelVariant::kRealPart:
    case KernelVariant::kPluriharmonic: {
      // Re K = a_0 + sum_{n>=1} ((a_n + a_{-n}) / 2) (s^n + conj(s)^n).
      const double scale = variant_ == KernelVariant::kRealPart ? 0.5 : 1.0;
      const int len = std::min<int>(
          n_max, static_cast<int>(std::max(pos.size() ? pos.size() - 1 : 0, neg.size())));
      std::vector<double> p(len + 1), q(len);
      p[0] = 1.0;
      for (int n = 1; n <= len; ++n) {
        const double b = scale * (coefficients_(n) + coefficients_(-n));
        p[n] = b;
        q[n - 1] = b;
      }
      return {p, q};
    }
    case KernelVariant::kModulus:
      break;
  }
  throw DomainError("the modulus variant has no coefficient series");
}

KernelValue EvalKernel(const KernelSpec& spec, const BallPoint& z, const BallPoint& w) {
  if (z.dimension() != spec.dimension() || w.dimension() != spec.dimension()) {
    throw DimensionMismatch("kernel of dimension " + std::to_string(spec.dimension()) +
                            " evaluated at points of dimension " +
                            std::to_string(z.dimension()) + ", " +
                            std::to_string(w.dimension()));
  }
  return spec.At(Inner(z, w));
}

namespace {

void CheckGramianInputs(const KernelSpec& spec, const std::vector<BallPoint>& points,
                        double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("Gramian radius must lie in [0, 1)");
  for (const BallPoint& p : points) {
    if (p.dimension() != spec.dimension()) {
      throw DimensionMismatch("Gramian point dimension does not match the kernel");
    }
  }
}

}  // namespace

Gramian EvalGramian(const KernelSpec& spec, const std::vector<BallPoint>& points,
                    double r, int threads) {
  CheckGramianInputs(spec, points, r);
  const std::size_t n = points.size();
  Gramian g;
  g.values.resize(n, n);
  std::vector<double> row_error(n, 0.0);
  const double r2 = r * r;
  ParallelFor(n, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      const KernelValue v = spec.At(r2 * Inner(points[i], points[j]));
      g.values(i, j) = v.value;
      row_error[i] = std::max(row_error[i], v.truncation_error);
    }
  });
  for (double e : row_error) g.max_truncation_error = std::max(g.max_truncation_error, e);
  return g;
}

Eigen::MatrixXd EvalRealGramian(const KernelSpec& spec,
                                const std::vector<BallPoint>& points, double r,
                                int threads) {
  if (!spec.is_real()) {
    throw DomainError("real Gramian requested for the holomorphic variant");
  }
  CheckGramianInputs(spec, points, r);
  const std::size_t n = points.size();
  Eigen::MatrixXd g(n, n);
  const double r2 = r * r;
  // Lower triangle computed, then mirrored; real variants are symmetric.
  ParallelFor(n, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j <= i; ++j) {
      g(i, j) = spec.RealAt(r2 * Inner(points[i], points[j]));
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i);
  }
  return g;
}

SpectrumDiagnostics DiagnoseSpectrum(const Eigen::MatrixXd& gramian,
                                     double relative_floor) {
  SpectrumDiagnostics d;
  if (gramian.size() == 0) return d;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gramian,
                                                        Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  d.min_eigenvalue = ev.minCoeff();
  d.spectral_norm = ev.cwiseAbs().maxCoeff();
  d.max_abs_entry = gramian.cwiseAbs().maxCoeff();
  d.psd = d.min_eigenvalue >= -relative_floor * d.spectral_norm;
  return d;
}

}  // namespace ballcap
