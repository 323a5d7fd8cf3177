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

// Coefficient calibration against grade-labelled corpora: Levenberg-Marquardt
// for the five traditional formulas, a direct linear solve for NERF.

#ifndef READGAUGE_CALIBRATION_H_
#define READGAUGE_CALIBRATION_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "readgauge/formulas.h"
#include "readgauge/nerf.h"
#include "readgauge/text.h"

namespace readgauge {

// K1 -> 1, K2-3 -> 2.5, K4-5 -> 4.5, K6-8 -> 7, K9-10 -> 9.5,
// K11-CCR -> 12. Numeric strings (optionally prefixed with "K", as in
// "K2.5") pass through. Throws Error(kUnknownBand).
double GradeBandToMidpoint(std::string_view band);

// Inverse of the band table: the band whose grade range holds the value.
std::string_view MidpointToBand(double grade);

struct LabeledItem {
  std::string id;
  std::string text;
  std::string label;
};

struct LabeledCorpus {
  std::vector<LabeledItem> items;

  // Grade midpoints of every label, in item order.
  std::vector<double> Grades() const;
};

// A delimited file with id, label and text columns, or a directory of .txt
// files next to a labels.csv / labels.tsv index (columns id, label; id is
// the file name without extension). Data errors name the file and line.
LabeledCorpus LoadCorpus(const std::filesystem::path &path);

struct FitOptions {
  std::size_t max_iterations = 1000;
  double step_tolerance = 1e-10;  // relative to the parameter norm
  double rss_tolerance = 1e-12;   // relative RSS change
  double gradient_tolerance = 1e-6;
};

struct FormulaFitResult {
  CoefficientSet coefficients;
  double residual_sum_squares = 0.0;
  double initial_residual_sum_squares = 0.0;
  double gradient_norm = 0.0;
  std::size_t iterations = 0;
  bool converged = false;  // implies gradient_norm <= gradient_tolerance
};

// Minimizes sum_i (formula(stats_i; a, b, c) - grade_i)^2 starting from
// init. AUTO is fit on its raw, unrounded value; SMOG keeps b >= 0.
// Errors: kTooFewItems (fewer than 3), kLengthMismatch, kNonFiniteStats,
// kDivergedFit, kWrongFormula for NERF.
FormulaFitResult FitFormula(std::span<const TextStats> stats,
                            std::span<const double> grades,
                            const CoefficientSet &init,
                            const FitOptions &options = {});

// Starts from the original coefficients of the formula.
FormulaFitResult FitFormula(const LabeledCorpus &corpus, Formula formula,
                            const TextOptions &text_options = {},
                            const FitOptions &options = {});

struct NerfFitResult {
  NerfCoefficients coefficients;
  double residual_sum_squares = 0.0;
  double initial_residual_sum_squares = 0.0;
  // The design was singular; the coefficients solve the ridge problem with
  // lambda = 1e-9 on column-equilibrated normal equations.
  bool rank_deficient = false;
};

// NERF is linear in its seven weights, so this solves the least-squares
// problem directly. init only supplies the reference RSS.
// Errors: kTooFewItems (fewer than 7), kLengthMismatch, kNonFiniteStats.
NerfFitResult FitNerf(std::span<const NerfFeatures> features,
                      std::span<const double> grades,
                      const NerfCoefficients &init = DefaultNerfCoefficients());

// Model value used for fitting: unrounded for every formula.
double RawFormulaValue(const TextStats &stats, const CoefficientSet &coeffs);

}  // namespace readgauge

#endif  // READGAUGE_CALIBRATION_H_
