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

#include "least_squares.h"

#include <algorithm>
#include <cmath>

namespace readgauge::internal {
namespace {

// |J^T r|_inf / (1 + |J|_F |r|): a cosine-like measure for large residuals
// that degrades to the absolute gradient near an exact fit.
double ScaledGradient(const Eigen::MatrixXd &jacobian,
                      const Eigen::VectorXd &residuals) {
  const Eigen::VectorXd gradient = jacobian.transpose() * residuals;
  return gradient.lpNorm<Eigen::Infinity>() /
         (1.0 + jacobian.norm() * residuals.norm());
}

bool AllFinite(const Eigen::VectorXd &v) { return v.allFinite(); }

}  // namespace

LmResult LevenbergMarquardt(const ResidualFn &residual_fn,
                            Eigen::VectorXd initial, std::size_t residuals,
                            const LmOptions &options,
                            const ProjectFn &project) {
  const Eigen::Index n = initial.size();
  LmResult result;
  if (project) project(&initial);
  Eigen::VectorXd params = std::move(initial);
  Eigen::VectorXd r(static_cast<Eigen::Index>(residuals));
  Eigen::MatrixXd jac(static_cast<Eigen::Index>(residuals), n);
  residual_fn(params, &r, &jac);
  if (!AllFinite(r) || !jac.allFinite()) {
    result.params = params;
    result.finite = false;
    return result;
  }
  double rss = r.squaredNorm();
  result.initial_rss = rss;

  Eigen::MatrixXd normal = jac.transpose() * jac;
  double lambda = 1e-3 * std::max(normal.diagonal().maxCoeff(), 1e-12);
  double nu = 2.0;
  bool stop = false;

  Eigen::VectorXd trial_r(r.size());
  Eigen::MatrixXd trial_jac(jac.rows(), jac.cols());
  std::size_t iteration = 0;
  while (iteration < options.max_iterations && !stop) {
    ++iteration;
    if (rss == 0.0 || ScaledGradient(jac, r) <= options.gradient_tolerance) {
      break;
    }
    const Eigen::VectorXd gradient = jac.transpose() * r;
    Eigen::VectorXd scale = normal.diagonal().cwiseMax(1e-12);
    Eigen::MatrixXd damped = normal;
    damped.diagonal() += lambda * scale;
    const Eigen::VectorXd step = damped.ldlt().solve(-gradient);
    if (!AllFinite(step)) {
      result.finite = false;
      break;
    }
    Eigen::VectorXd trial = params + step;
    if (project) project(&trial);
    const double step_norm = (trial - params).norm();
    const bool small_step =
        step_norm <= options.step_tolerance *
                         (params.norm() + options.step_tolerance);

    residual_fn(trial, &trial_r, &trial_jac);
    const double trial_rss = trial_r.squaredNorm();
    if (!AllFinite(trial_r) || !trial_jac.allFinite()) {
      lambda *= nu;
      nu *= 2.0;
      if (small_step || lambda > 1e30) {
        result.finite = false;
        break;
      }
      continue;
    }
    if (trial_rss < rss) {
      const double relative_change = (rss - trial_rss) / rss;
      params = std::move(trial);
      r = trial_r;
      jac = trial_jac;
      rss = trial_rss;
      normal = jac.transpose() * jac;
      lambda = std::max(lambda / 3.0, 1e-300);
      nu = 2.0;
      if (small_step || relative_change < options.rss_tolerance) stop = true;
    } else {
      lambda *= nu;
      nu *= 2.0;
      if (small_step || lambda > 1e30) stop = true;
    }
  }
  result.params = params;
  result.rss = rss;
  result.iterations = iteration;
  result.gradient_norm = ScaledGradient(jac, r);
  result.converged =
      result.finite && result.gradient_norm <= options.gradient_tolerance;
  return result;
}

}  // namespace readgauge::internal
