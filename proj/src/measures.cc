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
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <utility>

#include "ballcap/errors.h"

namespace ballcap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Complex PowInt(Complex z, int n) {
  Complex result = 1.0;
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

std::vector<double> EndpointGrid(double t0, double t1, int m) {
  std::vector<double> t(m);
  if (m == 1) {
    t[0] = t0;
    return t;
  }
  const double h = (t1 - t0) / (m - 1);
  for (int k = 0; k < m; ++k) t[k] = t0 + k * h;
  t[m - 1] = t1;
  return t;
}

Complex Cis(double t) { return {std::cos(t), std::sin(t)}; }

BallPoint UnitDirection(const std::vector<Complex>& zeta, int d) {
  if (static_cast<int>(zeta.size()) != d) {
    throw DimensionMismatch("set direction has dimension " +
                            std::to_string(zeta.size()) + ", expected " +
                            std::to_string(d));
  }
  BallPoint p(zeta);
  if (!p.OnBoundary()) throw DomainError("set direction must lie on the sphere");
  return p;
}

void RequireResolution(int m) {
  if (m < 1) throw DomainError("set resolution must be >= 1");
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<BallPoint> atoms, std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.size() != weights_.size()) {
    throw DimensionMismatch("measure has " + std::to_string(atoms_.size()) +
                            " atoms but " + std::to_string(weights_.size()) + " weights");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] >= 0.0) || !std::isfinite(weights_[i])) {
      throw DomainError("measure weight " + std::to_string(i) +
                        " must be finite and nonnegative");
    }
    if (atoms_[i].dimension() != atoms_[0].dimension()) {
      throw DimensionMismatch("measure atoms have mixed dimensions");
    }
  }
}

DiscreteMeasure DiscreteMeasure::Uniform(std::vector<BallPoint> atoms) {
  const std::size_t n = atoms.size();
  return DiscreteMeasure(std::move(atoms),
                         std::vector<double>(n, n ? 1.0 / static_cast<double>(n) : 0.0));
}

DiscreteMeasure DiscreteMeasure::Dirac(const BallPoint& p) {
  return DiscreteMeasure({p}, {1.0});
}

double DiscreteMeasure::total_mass() const {
  double s = 0.0;
  for (double w : weights_) s += w;
  return s;
}

bool DiscreteMeasure::is_probability(double tolerance) const {
  return std::abs(total_mass() - 1.0) <= tolerance;
}

DiscreteMeasure DiscreteMeasure::Normalized() const {
  const double mass = total_mass();
  if (!(mass > 0.0)) throw DomainError("cannot normalize a measure of zero mass");
  return Scaled(1.0 / mass);
}

DiscreteMeasure DiscreteMeasure::Restricted(const std::vector<bool>& keep) const {
  if (keep.size() != atoms_.size()) {
    throw DimensionMismatch("restriction mask length does not match atom count");
  }
  std::vector<BallPoint> atoms;
  std::vector<double> weights;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (keep[i]) {
      atoms.push_back(atoms_[i]);
      weights.push_back(weights_[i]);
    }
  }
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

DiscreteMeasure DiscreteMeasure::Scaled(double t) const {
  if (!(t >= 0.0)) throw DomainError("measure scale must be nonnegative");
  std::vector<double> weights = weights_;
  for (double& w : weights) w *= t;
  return DiscreteMeasure(atoms_, std::move(weights));
}

DiscreteMeasure DiscreteMeasure::Plus(const DiscreteMeasure& other) const {
  if (!empty() && !other.empty() && dimension() != other.dimension()) {
    throw DimensionMismatch("cannot add measures of different dimensions");
  }
  std::vector<BallPoint> atoms = atoms_;
  std::vector<double> weights = weights_;
  atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
  weights.insert(weights.end(), other.weights_.begin(), other.weights_.end());
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

double CountMultiIndices(int d, int degree) {
  // C(degree + d, d)
  double c = 1.0;
  for (int i = 1; i <= d; ++i) c = c * (degree + i) / i;
  return std::round(c);
}

std::vector<MultiIndex> EnumerateMultiIndices(int d, int degree, std::size_t cap) {
  if (d < 1) throw DomainError("multi-index dimension must be >= 1");
  if (degree < 0) throw DomainError("moment degree must be >= 0");
  const double count = CountMultiIndices(d, degree);
  if (count > static_cast<double>(cap)) {
    throw CombinatorialCapExceeded("degree " + std::to_string(degree) + " in d = " +
                                   std::to_string(d) + " needs " +
                                   std::to_string(static_cast<long long>(count)) +
                                   " multi-indices, cap is " + std::to_string(cap));
  }
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(count));
  MultiIndex alpha(d, 0);
  // Compositions of n into d parts, first coordinate descending.
  for (int n = 0; n <= degree; ++n) {
    std::fill(alpha.begin(), alpha.end(), 0);
    alpha[0] = n;
    while (true) {
      out.push_back(alpha);
      // Find the rightmost position (excluding the last) with a nonzero entry.
      int i = d - 2;
      while (i >= 0 && alpha[i] == 0) --i;
      if (i < 0) break;
      const int tail = alpha[d - 1];
      alpha[d - 1] = 0;
      alpha[i] -= 1;
      alpha[i + 1] = tail + 1;
    }
  }
  return out;
}

double MultinomialWeight(const MultiIndex& alpha) {
  // Product of binomials C(a_1 + ... + a_k, a_k).
  double w = 1.0;
  int partial = 0;
  for (int a : alpha) {
    for (int j = 1; j <= a; ++j) w = w * (partial + j) / j;
    partial += a;
  }
  return w;
}

Complex Monomial(const BallPoint& z, const MultiIndex& alpha) {
  if (static_cast<int>(alpha.size()) != z.dimension()) {
    throw DimensionMismatch("multi-index length does not match point dimension");
  }
  Complex v = 1.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i]) v *= PowInt(z[static_cast<int>(i)], alpha[i]);
  }
  return v;
}

std::vector<MultiIndexMoment> Moments(const DiscreteMeasure& mu, int degree,
                                      std::size_t cap) {
  if (mu.empty()) throw DomainError("moments of the empty measure");
  const auto indices = EnumerateMultiIndices(mu.dimension(), degree, cap);
  std::vector<MultiIndexMoment> out;
  out.reserve(indices.size());
  for (const MultiIndex& alpha : indices) {
    Complex hat = 0.0, check = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      const Complex v = Monomial(mu.atoms()[j], alpha);
      check += mu.weights()[j] * v;
      hat += mu.weights()[j] * std::conj(v);
    }
    out.push_back({alpha, hat, check});
  }
  return out;
}

std::string SetKindName(SetKind kind) {
  switch (kind) {
    case SetKind::kFinitePoints: return "points";
    case SetKind::kArc: return "arc";
    case SetKind::kFlatCircle: return "flat-circle";
    case SetKind::kTangentialCircle: return "tangential-circle";
    case SetKind::kProductLift: return "product-lift";
    case SetKind::kOrbitUnion: return "orbit-union";
  }
  return "unknown";
}

SetKind ParseSetKind(const std::string& name) {
  for (SetKind k : {SetKind::kFinitePoints, SetKind::kArc, SetKind::kFlatCircle,
                    SetKind::kTangentialCircle, SetKind::kProductLift,
                    SetKind::kOrbitUnion}) {
    if (SetKindName(k) == name) return k;
  }
  throw DomainError("unsupported set kind '" + name + "'");
}

SetDescription SetDescription::FinitePoints(std::vector<BallPoint> points) {
  SetDescription s;
  s.kind = SetKind::kFinitePoints;
  s.dimension = points.empty() ? 1 : points[0].dimension();
  s.resolution = static_cast<int>(points.size());
  s.points = std::move(points);
  return s;
}

SetDescription SetDescription::Arc(std::vector<Complex> zeta, double t0, double t1,
                                   int m) {
  SetDescription s;
  s.kind = SetKind::kArc;
  s.dimension = static_cast<int>(zeta.size());
  s.direction = std::move(zeta);
  s.t0 = t0;
  s.t1 = t1;
  s.resolution = m;
  return s;
}

SetDescription SetDescription::FlatCircle(std::vector<Complex> zeta, int m) {
  SetDescription s;
  s.kind = SetKind::kFlatCircle;
  s.dimension = static_cast<int>(zeta.size());
  s.direction = std::move(zeta);
  s.t0 = 0.0;
  s.t1 = kTwoPi;
  s.resolution = m;
  return s;
}

SetDescription SetDescription::TangentialCircle(std::vector<double> base_angles, int m) {
  SetDescription s;
  s.kind = SetKind::kTangentialCircle;
  s.dimension = 2;
  s.base_angles = std::move(base_angles);
  s.resolution = m;
  return s;
}

SetDescription SetDescription::ProductLift(double t0, double t1, int base_m,
                                           int orbit_m) {
  SetDescription s;
  s.kind = SetKind::kProductLift;
  s.dimension = 2;
  s.t0 = t0;
  s.t1 = t1;
  s.resolution = base_m;
  s.orbit_resolution = orbit_m;
  return s;
}

SetDescription SetDescription::OrbitUnion(std::vector<BallPoint> base,
                                          std::vector<int> frequencies, int m) {
  SetDescription s;
  s.kind = SetKind::kOrbitUnion;
  s.dimension = base.empty() ? static_cast<int>(frequencies.size()) : base[0].dimension();
  s.points = std::move(base);
  s.frequencies = std::move(frequencies);
  s.resolution = m;
  return s;
}

SetDescription SetDescription::WithResolution(int m) const {
  SetDescription s = *this;
  s.resolution = m;
  return s;
}

double SetDescription::NormalizedLength() const { return (t1 - t0) / kTwoPi; }

Complex UnitRoot(long k, long m) {
  k %= m;
  if (k < 0) k += m;
  if ((4 * k) % m == 0) {
    switch ((4 * k) / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return Cis(kTwoPi * static_cast<double>(k) / static_cast<double>(m));
}

BallPoint OrbitStructure::Power(const BallPoint& p, long j) const {
  std::vector<Complex> c = p.coordinates();
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] *= UnitRoot(static_cast<long>(frequencies[i]) * j, order);
  }
  return BallPoint(std::move(c));
}

std::vector<BallPoint> OrbitStructure::Expand() const {
  std::vector<BallPoint> out;
  out.reserve(base.size() * order);
  for (const BallPoint& b : base) {
    for (int j = 0; j < order; ++j) out.push_back(Power(b, j));
  }
  return out;
}

bool HasOrbitStructure(const SetDescription& set) {
  return set.kind == SetKind::kFlatCircle || set.kind == SetKind::kTangentialCircle ||
         set.kind == SetKind::kProductLift || set.kind == SetKind::kOrbitUnion;
}

OrbitStructure Orbits(const SetDescription& set) {
  OrbitStructure o;
  switch (set.kind) {
    case SetKind::kFlatCircle:
      RequireResolution(set.resolution);
      o.base = {UnitDirection(set.direction, set.dimension)};
      o.frequencies.assign(set.dimension, 1);
      o.order = set.resolution;
      return o;
    case SetKind::kTangentialCircle:
      RequireResolution(set.resolution);
      if (set.base_angles.empty()) throw DomainError("tangential circle needs a base set");
      for (double theta : set.base_angles) o.base.push_back(TorusPoint(1.0, Cis(theta)));
      o.frequencies = {1, -1};
      o.order = set.resolution;
      return o;
    case SetKind::kProductLift:
      RequireResolution(set.resolution);
      RequireResolution(set.orbit_resolution);
      for (double t : EndpointGrid(set.t0, set.t1, set.resolution)) {
        o.base.push_back(TorusPoint(1.0, Cis(t)));
      }
      o.frequencies = {1, -1};
      o.order = set.orbit_resolution;
      return o;
    case SetKind::kOrbitUnion:
      RequireResolution(set.resolution);
      if (static_cast<int>(set.frequencies.size()) != set.dimension) {
        throw DimensionMismatch("orbit frequencies do not match the set dimension");
      }
      for (const BallPoint& p : set.points) {
        if (p.dimension() != set.dimension) {
          throw DimensionMismatch("orbit base points have mixed dimensions");
        }
      }
      o.base = set.points;
      o.frequencies = set.frequencies;
      o.order = set.resolution;
      return o;
    default:
      throw DomainError("set kind '" + SetKindName(set.kind) + "' has no orbit structure");
  }
}

std::vector<BallPoint> Discretize(const SetDescription& set) {
  switch (set.kind) {
    case SetKind::kFinitePoints:
      for (const BallPoint& p : set.points) {
        if (p.dimension() != set.dimension) {
          throw DimensionMismatch("finite set points have mixed dimensions");
        }
      }
      return set.points;
    case SetKind::kArc: {
      RequireResolution(set.resolution);
      const BallPoint zeta = UnitDirection(set.direction, set.dimension);
      std::vector<BallPoint> out;
      for (double t : EndpointGrid(set.t0, set.t1, set.resolution)) {
        out.push_back(zeta.Rotated(Cis(t)));
      }
      return out;
    }
    case SetKind::kFlatCircle:
    case SetKind::kTangentialCircle:
    case SetKind::kProductLift:
    case SetKind::kOrbitUnion:
      return Orbits(set).Expand();
  }
  throw DomainError("unsupported set kind");
}

BallPoint TorusPoint(Complex u1, Complex u2) {
  return BallPoint({kInvSqrt2 * u1, kInvSqrt2 * u2});
}

DiscreteMeasure Pushforward(const DiscreteMeasure& mu, PushforwardMap map) {
  const int in_dim = map == PushforwardMap::kIotaFlat ? 1 : 2;
  std::vector<BallPoint> atoms;
  atoms.reserve(mu.size());
  for (const BallPoint& p : mu.atoms()) {
    if (p.dimension() != in_dim) {
      throw DimensionMismatch("pushforward expects atoms of dimension " +
                              std::to_string(in_dim));
    }
    std::vector<Complex> image;
    switch (map) {
      case PushforwardMap::kIotaFlat:
        image = {p[0], 0.0};
        break;
      case PushforwardMap::kHTangential:
        image = {p[0], std::sqrt(2.0) * std::conj(p[0]) * p[1]};
        break;
      case PushforwardMap::kRProduct:
        image = {2.0 * p[0] * p[1]};
        break;
    }
    double norm2 = 0.0;
    for (const Complex& c : image) norm2 += std::norm(c);
    if (std::sqrt(norm2) > 1.0 + kBallSlack) {
      throw DomainError("pushforward image leaves the closed ball (norm " +
                        std::to_string(std::sqrt(norm2)) + ")");
    }
    atoms.emplace_back(std::move(image));
  }
  return DiscreteMeasure(std::move(atoms), mu.weights());
}

void WriteMeasureCsv(const DiscreteMeasure& mu, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write measure CSV " + path);
  const int d = mu.dimension();
  out << "# discrete measure: one atom per row; columns ";
  for (int i = 1; i <= d; ++i) out << "re_z" << i << ",im_z" << i << ",";
  out << "weight\n";
  out << std::setprecision(17);
  for (std::size_t j = 0; j < mu.size(); ++j) {
    for (int i = 0; i < d; ++i) {
      out << mu.atoms()[j][i].real() << "," << mu.atoms()[j][i].imag() << ",";
    }
    out << mu.weights()[j] << "\n";
  }
  if (!out) throw IoError("failed while writing " + path);
}

DiscreteMeasure ReadMeasureCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open measure CSV " + path);
  std::vector<BallPoint> atoms;
  std::vector<double> weights;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        fields.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw IoError(path + ":" + std::to_string(line_number) + ": bad number '" +
                      cell + "'");
      }
    }
    if (fields.size() < 3 || fields.size() % 2 == 0) {
      throw IoError(path + ":" + std::to_string(line_number) +
                    ": expected 2d coordinates and a weight");
    }
    std::vector<Complex> z;
    for (std::size_t i = 0; i + 1 < fields.size(); i += 2) {
      z.emplace_back(fields[i], fields[i + 1]);
    }
    try {
      atoms.emplace_back(std::move(z));
    } catch (const Error& e) {
      throw IoError(path + ":" + std::to_string(line_number) + ": " + e.what());
    }
    weights.push_back(fields.back());
  }
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

}  // namespace ballcap
