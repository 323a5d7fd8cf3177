// Copyright 2026 The ReadGauge Authors.
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

// Small dense Levenberg-Marquardt solver used by formula calibration.

#ifndef READGAUGE_SRC_LEAST_SQUARES_H_
#define READGAUGE_SRC_LEAST_SQUARES_H_

#include <cstddef>
#include <functional>

#include <Eigen/Dense>

namespace readgauge::internal {

struct LmOptions {
  std::size_t max_iterations = 1000;
  // Relative to the parameter norm.
  double step_tolerance = 1e-10;
  double rss_tolerance = 1e-12;
  // |J^T r|_inf / (1 + |J|_F |r|).
  double gradient_tolerance = 1e-6;
};

struct LmResult {
  Eigen::VectorXd params;
  double rss = 0.0;
  double initial_rss = 0.0;
  double gradient_norm = 0.0;  // scaled, see LmOptions::gradient_tolerance
  std::size_t iterations = 0;
  bool converged = false;
  bool finite = true;
};

// Fills residuals (and the Jacobian, when non-null) at params.
using ResidualFn = std::function<void(const Eigen::VectorXd &params,
                                      Eigen::VectorXd *residuals,
                                      Eigen::MatrixXd *jacobian)>;
// Maps a trial point back into the feasible set.
using ProjectFn = std::function<void(Eigen::VectorXd *params)>;

LmResult LevenbergMarquardt(const ResidualFn &residual_fn,
                            Eigen::VectorXd initial, std::size_t residuals,
                            const LmOptions &options,
                            const ProjectFn &project = nullptr);

}  // namespace readgauge::internal

#endif  // READGAUGE_SRC_LEAST_SQUARES_H_
