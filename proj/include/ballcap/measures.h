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

#ifndef BALLCAP_MEASURES_H_
#define BALLCAP_MEASURES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "ballcap/ball.h"

namespace ballcap {

// A finitely supported nonnegative measure on the closed ball. Weights are
// stored as given; Normalized() returns the probability view.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  DiscreteMeasure(std::vector<BallPoint> atoms, std::vector<double> weights);

  static DiscreteMeasure Uniform(std::vector<BallPoint> atoms);
  static DiscreteMeasure Dirac(const BallPoint& p);

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  // Dimension of the ambient ball; 0 for the empty measure.
  int dimension() const { return atoms_.empty() ? 0 : atoms_[0].dimension(); }
  const std::vector<BallPoint>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  double total_mass() const;
  bool is_probability(double tolerance = 1e-12) const;

  DiscreteMeasure Normalized() const;
  // chi_F mu for F given by a keep-mask over atoms; weights are not rescaled.
  DiscreteMeasure Restricted(const std::vector<bool>& keep) const;
  DiscreteMeasure Scaled(double t) const;
  // The sum of two measures as a concatenated atom list.
  DiscreteMeasure Plus(const DiscreteMeasure& other) const;

 private:
  std::vector<BallPoint> atoms_;
  std::vector<double> weights_;
};

using MultiIndex = std::vector<int>;

inline constexpr std::size_t kDefaultMultiIndexCap = 2000000;

// Number of multi-indices in N_0^d with |alpha| <= degree.
double CountMultiIndices(int d, int degree);
// All multi-indices with |alpha| <= degree in graded lexicographic order.
// Throws CombinatorialCapExceeded when more than `cap` would be produced.
std::vector<MultiIndex> EnumerateMultiIndices(int d, int degree,
                                              std::size_t cap = kDefaultMultiIndexCap);
// |alpha|! / alpha!.
double MultinomialWeight(const MultiIndex& alpha);
// z^alpha.
Complex Monomial(const BallPoint& z, const MultiIndex& alpha);

struct MultiIndexMoment {
  MultiIndex alpha;
  Complex hat_value;    // integral of conj(z^alpha)
  Complex check_value;  // integral of z^alpha
};

std::vector<MultiIndexMoment> Moments(const DiscreteMeasure& mu, int degree,
                                      std::size_t cap = kDefaultMultiIndexCap);

enum class SetKind {
  kFinitePoints,
  kArc,               // {e^{it} zeta : t in [t0, t1]}, endpoints included
  kFlatCircle,        // {e^{it} zeta : t in [0, 2 pi)}
  kTangentialCircle,  // h(dD x E) for a finite base set E
  kProductLift,       // h(dD x E) for a base arc E
  kOrbitUnion,        // union of circle orbits of given base points
};

std::string SetKindName(SetKind kind);
SetKind ParseSetKind(const std::string& name);

// A compact subset of the closed ball together with a discretization
// resolution. h(z1, z2) = 2^{-1/2} (z1, conj(z1) z2) on dD x dD.
struct SetDescription {
  SetKind kind = SetKind::kFinitePoints;
  int dimension = 1;
  std::vector<BallPoint> points;     // kFinitePoints
  std::vector<Complex> direction;    // zeta for kArc and kFlatCircle
  double t0 = 0.0, t1 = 0.0;         // kArc, kProductLift base arc
  std::vector<double> base_angles;   // kTangentialCircle base set E
  std::vector<int> frequencies;      // kOrbitUnion: U_t = diag(e^{i f_c t})
  int resolution = 1;                // m
  int orbit_resolution = 64;         // circle factor of kProductLift

  static SetDescription FinitePoints(std::vector<BallPoint> points);
  static SetDescription Arc(std::vector<Complex> zeta, double t0, double t1, int m);
  static SetDescription FlatCircle(std::vector<Complex> zeta, int m);
  static SetDescription TangentialCircle(std::vector<double> base_angles, int m);
  static SetDescription ProductLift(double t0, double t1, int base_m, int orbit_m);
  // Base points are stored in `points`; the orbit order is the resolution.
  static SetDescription OrbitUnion(std::vector<BallPoint> base, std::vector<int> frequencies,
                                   int m);

  SetDescription WithResolution(int m) const;
  // Normalized arc length (t1 - t0) / (2 pi) for arc-based sets.
  double NormalizedLength() const;
};

// Equispaced points on the set; deterministic for fixed resolution.
std::vector<BallPoint> Discretize(const SetDescription& set);

// e^{2 pi i k / m}, exact at multiples of a quarter turn.
Complex UnitRoot(long k, long m);

// The discretized set as the union of orbits {U^j b : j < order} of the
// diagonal unitary U = diag(e^{2 pi i f_c / order}). Absent for sets
// without symmetry.
struct OrbitStructure {
  std::vector<BallPoint> base;
  std::vector<int> frequencies;  // f_c per coordinate
  int order = 1;

  // U^j applied to p.
  BallPoint Power(const BallPoint& p, long j) const;

  // U^j b in orbit-major order, matching Discretize.
  std::vector<BallPoint> Expand() const;
};
bool HasOrbitStructure(const SetDescription& set);
OrbitStructure Orbits(const SetDescription& set);

enum class PushforwardMap {
  kIotaFlat,     // z -> (z, 0), d = 1 to d = 2
  kHTangential,  // see Pushforward
  kRProduct,     // (z1, z2) -> 2 z1 z2, d = 2 to d = 1
};

// Maps atoms and keeps weights. For kHTangential the input atoms encode
// points (u1, u2) of dD x dD as 2^{-1/2} (u1, u2) in dB_2, and the image is
// h(u1, u2) = 2^{-1/2} (u1, conj(u1) u2); in coordinates w this reads
// (w1, sqrt(2) conj(w1) w2). Throws DomainError when an image leaves the
// closed ball by more than 1e-12.
DiscreteMeasure Pushforward(const DiscreteMeasure& mu, PushforwardMap map);

// The point 2^{-1/2} (u1, u2) for unimodular u1, u2.
BallPoint TorusPoint(Complex u1, Complex u2);

// CSV rows: Re z_1, Im z_1, ..., Re z_d, Im z_d, weight. Lines starting
// with '#' are comments.
void WriteMeasureCsv(const DiscreteMeasure& mu, const std::string& path);
DiscreteMeasure ReadMeasureCsv(const std::string& path);

}  // namespace ballcap

#endif  // BALLCAP_MEASURES_H_
