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

#ifndef BALLCAP_SIMPLEX_QP_H_
#define BALLCAP_SIMPLEX_QP_H_

#include <string>

#include <Eigen/Dense>

#include "ballcap/errors.h"

namespace ballcap {

struct SimplexQpOptions {
  // Stop when 2 (l'Gl - min Gl) <= min(relative * max(1, l'Gl), absolute).
  double relative_tolerance = 1e-9;
  double absolute_tolerance = 1e-8;
  long max_iterations = 100000;  // per stage
  // Negative curvature below -psd_tolerance * max|G_ii| is a conditioning error.
  double psd_tolerance = 1e-9;
  // Full eigenvalue check for matrices up to this size.
  int spectrum_check_limit = 200;
};

enum class SolverStage { kPairwiseFrankWolfe, kActiveSet, kProjectedGradient };
std::string SolverStageName(SolverStage stage);

struct SimplexQpResult {
  Eigen::VectorXd weights;
  double energy = 0.0;                // l'Gl
  double gap = 0.0;                   // 2 (l'Gl - min_i (Gl)_i)
  double variational_residual = 0.0;  // min_i (Gl)_i - l'Gl
  double min_gradient = 0.0;          // min_i (Gl)_i
  long iterations = 0;                // summed over stages
  SolverStage stage = SolverStage::kPairwiseFrankWolfe;
  bool converged = false;
};

// Iteration caps exhausted in every stage; carries the best iterate found.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, SimplexQpResult best)
      : Error(what), best_(std::move(best)) {}
  const SimplexQpResult& best() const { return best_; }

 private:
  SimplexQpResult best_;
};

// min l'Gl over the probability simplex for a symmetric PSD G. Starts from
// uniform weights; ties go to the lowest index.
SimplexQpResult MinimizeOnSimplex(const Eigen::MatrixXd& gramian,
                                  const SimplexQpOptions& options = {});

// Fills energy, gap, residual from a fresh product G l.
void Certify(const Eigen::MatrixXd& gramian, SimplexQpResult& result);

// Euclidean projection onto {x >= 0, sum x = 1}.
Eigen::VectorXd ProjectOntoSimplex(const Eigen::VectorXd& v);

struct NonnegativeQpResult {
  Eigen::VectorXd x;
  double kkt_residual = 0.0;  // max violation of x >= 0, Gx >= 1, x_i (Gx - 1)_i = 0
  long sweeps = 0;
  bool converged = false;
};
// min 1/2 x'Gx - 1'x over x >= 0 by cyclic coordinate descent.
NonnegativeQpResult SolveNonnegativeQp(const Eigen::MatrixXd& gramian, double tolerance,
                                       long max_sweeps = 20000);

}  // namespace ballcap

#endif  // BALLCAP_SIMPLEX_QP_H_
