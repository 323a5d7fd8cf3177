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

#include "readgauge/calibration.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include <Eigen/Dense>

#include "least_squares.h"
#include "readgauge/delimited.h"
#include "readgauge/error.h"

namespace readgauge {
namespace {

struct Band {
  std::string_view name;
  double midpoint;
  double upper;  // exclusive upper edge of the band's grade range
};

constexpr std::array<Band, 6> kBands = {{
    {"K1", 1.0, 2.0},
    {"K2-3", 2.5, 4.0},
    {"K4-5", 4.5, 6.0},
    {"K6-8", 7.0, 9.0},
    {"K9-10", 9.5, 11.0},
    {"K11-CCR", 12.0, INFINITY},
}};

std::optional<double> ParseGrade(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

// Ratios each formula is linear or nonlinear in.
struct FormulaInputs {
  double words_per_sentence;
  double syllables_per_word;
  double difficult_per_word;
  double polysyllables_per_sentence;
  double letters_per_word;
  double sentences_per_word;
};

FormulaInputs Inputs(const TextStats &s) {
  const double words = static_cast<double>(s.words);
  const double sentences = static_cast<double>(s.sentences);
  return {words / sentences,
          static_cast<double>(s.syllables) / words,
          static_cast<double>(s.difficult_words) / words,
          static_cast<double>(s.polysyllable_words) / sentences,
          static_cast<double>(s.letters) / words,
          sentences / words};
}

// Value and gradient with respect to (a, b, c).
double Evaluate(Formula formula, const FormulaInputs &x, double a, double b,
                double c, Eigen::Ref<Eigen::RowVectorXd> grad) {
  switch (formula) {
    case Formula::kFkgl:
      grad << x.words_per_sentence, x.syllables_per_word, 1.0;
      return a * x.words_per_sentence + b * x.syllables_per_word + c;
    case Formula::kFogi:
      grad << x.words_per_sentence + b * x.difficult_per_word,
          a * x.difficult_per_word, 1.0;
      return a * (x.words_per_sentence + b * x.difficult_per_word) + c;
    case Formula::kSmog: {
      const double p = x.polysyllables_per_sentence;
      const double root = std::sqrt(std::max(b, 0.0) * p);
      // d/db a*sqrt(b p) = a p / (2 sqrt(b p)); b is floored to keep the
      // derivative finite on the constraint boundary.
      const double db =
          p == 0.0 ? 0.0 : a * p / (2.0 * std::sqrt(std::max(b, 1e-12) * p));
      grad << root, db, 1.0;
      return a * root + c;
    }
    case Formula::kCole:
      grad << 100.0 * x.letters_per_word, 100.0 * x.sentences_per_word, 1.0;
      return a * 100.0 * x.letters_per_word +
             b * 100.0 * x.sentences_per_word + c;
    case Formula::kAuto:
      grad << x.letters_per_word, x.words_per_sentence, 1.0;
      return a * x.letters_per_word + b * x.words_per_sentence + c;
    case Formula::kNerf:
      break;
  }
  throw Error(ErrorCode::kWrongFormula, "NERF is fit with FitNerf");
}

void CheckLengths(std::size_t items, std::size_t grades) {
  if (items != grades) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(items) + " items but " +
                    std::to_string(grades) + " grades");
  }
}

void CheckGrades(std::span<const double> grades) {
  for (std::size_t i = 0; i < grades.size(); ++i) {
    if (!std::isfinite(grades[i])) {
      throw Error(ErrorCode::kNonFiniteStats,
                  "grade of item " + std::to_string(i) + " is not finite");
    }
  }
}

LabeledCorpus LoadCorpusTable(const std::filesystem::path &path) {
  const DelimitedTable table = ReadDelimitedFile(path);
  const auto id = table.Column("id");
  const auto label = table.Column("label");
  const auto text = table.Column("text");
  if (!id || !label || !text) {
    throw Error(ErrorCode::kMalformedRow,
                path.string() + ":1: corpus header needs id, label and text");
  }
  LabeledCorpus corpus;
  const std::size_t needed = std::max({*id, *label, *text});
  for (const auto &row : table.rows) {
    if (row.fields.size() <= needed) {
      throw Error(ErrorCode::kMalformedRow,
                  path.string() + ":" + std::to_string(row.line) +
                      ": missing columns");
    }
    corpus.items.push_back(
        {row.fields[*id], row.fields[*text], row.fields[*label]});
  }
  return corpus;
}

LabeledCorpus LoadCorpusDirectory(const std::filesystem::path &dir) {
  std::filesystem::path index;
  for (const char *name : {"labels.csv", "labels.tsv"}) {
    if (std::filesystem::exists(dir / name)) index = dir / name;
  }
  if (index.empty()) {
    throw Error(ErrorCode::kFileUnreadable,
                dir.string() + ": no labels.csv or labels.tsv index");
  }
  const DelimitedTable table = ReadDelimitedFile(index);
  const auto id = table.Column("id");
  const auto label = table.Column("label");
  if (!id || !label) {
    throw Error(ErrorCode::kMalformedRow,
                index.string() + ":1: index header needs id and label");
  }
  LabeledCorpus corpus;
  for (const auto &row : table.rows) {
    if (row.fields.size() <= std::max(*id, *label)) {
      throw Error(ErrorCode::kMalformedRow,
                  index.string() + ":" + std::to_string(row.line) +
                      ": missing columns");
    }
    const std::string &item_id = row.fields[*id];
    corpus.items.push_back(
        {item_id, ReadFile(dir / (item_id + ".txt")), row.fields[*label]});
  }
  return corpus;
}

}  // namespace

double GradeBandToMidpoint(std::string_view band) {
  const auto first = band.find_first_not_of(" \t");
  const auto last = band.find_last_not_of(" \t");
  if (first == std::string_view::npos) {
    throw Error(ErrorCode::kUnknownBand, "empty grade label");
  }
  band = band.substr(first, last - first + 1);
  for (const Band &b : kBands) {
    if (b.name == band) return b.midpoint;
  }
  if (const auto grade = ParseGrade(band)) return *grade;
  if (band.size() > 1 && (band[0] == 'K' || band[0] == 'k')) {
    if (const auto grade = ParseGrade(band.substr(1))) return *grade;
  }
  throw Error(ErrorCode::kUnknownBand,
              "unknown grade band '" + std::string(band) + "'");
}

std::string_view MidpointToBand(double grade) {
  for (const Band &b : kBands) {
    if (grade < b.upper) return b.name;
  }
  return kBands.back().name;
}

std::vector<double> LabeledCorpus::Grades() const {
  std::vector<double> grades;
  grades.reserve(items.size());
  for (const LabeledItem &item : items) {
    try {
      grades.push_back(GradeBandToMidpoint(item.label));
    } catch (const Error &e) {
      throw Error(e.code(), "item '" + item.id + "': " + e.what());
    }
  }
  return grades;
}

LabeledCorpus LoadCorpus(const std::filesystem::path &path) {
  if (std::filesystem::is_directory(path)) return LoadCorpusDirectory(path);
  return LoadCorpusTable(path);
}

double RawFormulaValue(const TextStats &stats, const CoefficientSet &coeffs) {
  if (stats.words == 0 || stats.sentences == 0) {
    throw Error(ErrorCode::kNonFiniteStats, "item has no words or sentences");
  }
  Eigen::RowVectorXd unused(3);
  return Evaluate(coeffs.formula, Inputs(stats), coeffs.a, coeffs.b, coeffs.c,
                  unused);
}

FormulaFitResult FitFormula(std::span<const TextStats> stats,
                            std::span<const double> grades,
                            const CoefficientSet &init,
                            const FitOptions &options) {
  if (init.formula == Formula::kNerf) {
    throw Error(ErrorCode::kWrongFormula, "NERF is fit with FitNerf");
  }
  CheckLengths(stats.size(), grades.size());
  if (stats.size() < 3) {
    throw Error(ErrorCode::kTooFewItems,
                "a 3-coefficient fit needs at least 3 items, got " +
                    std::to_string(stats.size()));
  }
  CheckGrades(grades);
  std::vector<FormulaInputs> inputs;
  inputs.reserve(stats.size());
  for (std::size_t i = 0; i < stats.size(); ++i) {
    if (stats[i].words == 0 || stats[i].sentences == 0) {
      throw Error(ErrorCode::kNonFiniteStats,
                  "item " + std::to_string(i) + " has no words or sentences");
    }
    inputs.push_back(Inputs(stats[i]));
  }

  const Formula formula = init.formula;
  const auto residual_fn = [&](const Eigen::VectorXd &p, Eigen::VectorXd *r,
                               Eigen::MatrixXd *jac) {
    Eigen::RowVectorXd grad(3);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const auto row = static_cast<Eigen::Index>(i);
      (*r)(row) = Evaluate(formula, inputs[i], p(0), p(1), p(2), grad) -
                  grades[i];
      if (jac != nullptr) jac->row(row) = grad;
    }
  };
  internal::ProjectFn project;
  if (formula == Formula::kSmog) {
    project = [](Eigen::VectorXd *p) { (*p)(1) = std::max((*p)(1), 0.0); };
  }
  internal::LmOptions lm;
  lm.max_iterations = options.max_iterations;
  lm.step_tolerance = options.step_tolerance;
  lm.rss_tolerance = options.rss_tolerance;
  lm.gradient_tolerance = options.gradient_tolerance;
  const internal::LmResult fit = internal::LevenbergMarquardt(
      residual_fn, Eigen::Vector3d(init.a, init.b, init.c), inputs.size(), lm,
      project);
  if (!fit.finite || !std::isfinite(fit.rss)) {
    throw Error(ErrorCode::kDivergedFit,
                std::string(FormulaName(formula)) +
                    " fit produced non-finite residuals");
  }
  FormulaFitResult result;
  result.coefficients = {formula, Variant::kCustom, fit.params(0),
                         fit.params(1), fit.params(2)};
  result.residual_sum_squares = fit.rss;
  result.initial_residual_sum_squares = fit.initial_rss;
  result.gradient_norm = fit.gradient_norm;
  result.iterations = fit.iterations;
  result.converged = fit.converged;
  return result;
}

FormulaFitResult FitFormula(const LabeledCorpus &corpus, Formula formula,
                            const TextOptions &text_options,
                            const FitOptions &options) {
  const std::vector<double> grades = corpus.Grades();
  std::vector<TextStats> stats;
  stats.reserve(corpus.items.size());
  for (const LabeledItem &item : corpus.items) {
    try {
      stats.push_back(ComputeTextStats(item.text, text_options));
    } catch (const Error &e) {
      throw Error(ErrorCode::kNonFiniteStats,
                  "item '" + item.id + "': " + e.what());
    }
  }
  return FitFormula(stats, grades,
                    BuiltinCoefficients(formula, Variant::kOriginal), options);
}

NerfFitResult FitNerf(std::span<const NerfFeatures> features,
                      std::span<const double> grades,
                      const NerfCoefficients &init) {
  constexpr auto kParams = static_cast<Eigen::Index>(kNerfParameterCount);
  CheckLengths(features.size(), grades.size());
  if (features.size() < kNerfParameterCount) {
    throw Error(ErrorCode::kTooFewItems,
                "a 7-coefficient fit needs at least 7 items, got " +
                    std::to_string(features.size()));
  }
  CheckGrades(grades);
  const auto rows = static_cast<Eigen::Index>(features.size());
  Eigen::MatrixXd design(rows, kParams);
  Eigen::VectorXd target(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto &f = features[static_cast<std::size_t>(i)];
    if (!std::isfinite(f.aoa_sum) || !std::isfinite(f.familiarity_sum) ||
        f.words == 0 || f.sentences == 0) {
      throw Error(ErrorCode::kNonFiniteStats,
                  "features of item " + std::to_string(i) + " are invalid");
    }
    const auto x = NerfRegressors(f);
    for (Eigen::Index j = 0; j < kParams; ++j) {
      design(i, j) = x[static_cast<std::size_t>(j)];
    }
    target(i) = grades[static_cast<std::size_t>(i)];
  }

  const auto w0 = NerfWeights(init);
  const Eigen::Map<const Eigen::VectorXd> init_weights(w0.data(), kParams);
  NerfFitResult result;
  result.initial_residual_sum_squares =
      (design * init_weights - target).squaredNorm();

  // Equilibrate columns so the rank test and ridge term are scale-free.
  Eigen::VectorXd column_scale = design.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < kParams; ++j) {
    if (column_scale(j) == 0.0) column_scale(j) = 1.0;
  }
  const Eigen::MatrixXd scaled =
      design * column_scale.cwiseInverse().asDiagonal();
  Eigen::MatrixXd normal = scaled.transpose() * scaled;
  const Eigen::VectorXd rhs = scaled.transpose() * target;

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(
      normal, Eigen::EigenvaluesOnly);
  const double largest = eigen.eigenvalues().maxCoeff();
  const double smallest = eigen.eigenvalues().minCoeff();
  result.rank_deficient = !(smallest > 1e-12 * largest);
  if (result.rank_deficient) normal.diagonal().array() += 1e-9;

  const auto ldlt = normal.ldlt();
  Eigen::VectorXd solution = ldlt.solve(rhs);
  if (!result.rank_deficient) {
    // One step of iterative refinement against the unsquared system.
    solution += ldlt.solve(scaled.transpose() * (target - scaled * solution));
  }
  const Eigen::VectorXd weights = solution.cwiseQuotient(column_scale);
  std::array<double, kNerfParameterCount> w{};
  for (Eigen::Index j = 0; j < kParams; ++j) {
    w[static_cast<std::size_t>(j)] = weights(j);
  }
  result.coefficients = NerfCoefficientsFromWeights(w, Variant::kCustom);
  result.residual_sum_squares = (design * weights - target).squaredNorm();
  return result;
}

}  // namespace readgauge
