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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "readgauge/calibration.h"
#include "readgauge/error.h"
#include "readgauge/formulas.h"
#include "synthetic.h"

namespace readgauge {
namespace {

namespace fs = std::filesystem;

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kEmptyInput;
}

double RelErr(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

TEST(GradeBandTest, Midpoints) {
  EXPECT_EQ(GradeBandToMidpoint("K1"), 1.0);
  EXPECT_EQ(GradeBandToMidpoint("K2-3"), 2.5);
  EXPECT_EQ(GradeBandToMidpoint("K4-5"), 4.5);
  EXPECT_EQ(GradeBandToMidpoint("K6-8"), 7.0);
  EXPECT_EQ(GradeBandToMidpoint("K9-10"), 9.5);
  EXPECT_EQ(GradeBandToMidpoint("K11-CCR"), 12.0);
  EXPECT_EQ(GradeBandToMidpoint("7"), 7.0);
  EXPECT_EQ(GradeBandToMidpoint(" 3.5 "), 3.5);
  EXPECT_EQ(GradeBandToMidpoint("K2.5"), 2.5);
}

TEST(GradeBandTest, UnknownBands) {
  for (const char *bad : {"", "K12-13", "grade six", "K"}) {
    EXPECT_EQ(CodeOf([&] { GradeBandToMidpoint(bad); }),
              ErrorCode::kUnknownBand)
        << bad;
  }
}

TEST(GradeBandTest, MidpointsMapBackToTheirBand) {
  for (const char *band : {"K1", "K2-3", "K4-5", "K6-8", "K9-10", "K11-CCR"}) {
    EXPECT_EQ(MidpointToBand(GradeBandToMidpoint(band)), band);
  }
}

struct SyntheticCase {
  Formula formula;
  Variant generator;
  Variant init;
};

class FitFormulaRecoveryTest : public ::testing::TestWithParam<SyntheticCase> {};

TEST_P(FitFormulaRecoveryTest, NoiseFreeRecovery) {
  const SyntheticCase c = GetParam();
  const CoefficientSet truth = BuiltinCoefficients(c.formula, c.generator);
  std::mt19937_64 rng(123);
  const auto stats = testing::SyntheticStats(rng, 69);
  std::vector<double> grades;
  for (const auto &s : stats) grades.push_back(RawFormulaValue(s, truth));
  const FormulaFitResult fit =
      FitFormula(stats, grades, BuiltinCoefficients(c.formula, c.init));
  EXPECT_LT(fit.residual_sum_squares, 1e-12);
  EXPECT_LE(fit.residual_sum_squares, fit.initial_residual_sum_squares);
  EXPECT_TRUE(fit.converged);
  EXPECT_EQ(fit.coefficients.variant, Variant::kCustom);
  EXPECT_EQ(fit.coefficients.formula, c.formula);
  EXPECT_LT(RelErr(fit.coefficients.a, truth.a), 1e-6);
  EXPECT_LT(RelErr(fit.coefficients.b, truth.b), 1e-6);
  EXPECT_LT(RelErr(fit.coefficients.c, truth.c), 1e-6);
}

INSTANTIATE_TEST_SUITE_P(
    Identifiable, FitFormulaRecoveryTest,
    ::testing::Values(
        SyntheticCase{Formula::kFkgl, Variant::kOriginal, Variant::kAdjusted},
        SyntheticCase{Formula::kFkgl, Variant::kAdjusted, Variant::kOriginal},
        SyntheticCase{Formula::kFogi, Variant::kAdjusted, Variant::kOriginal},
        SyntheticCase{Formula::kCole, Variant::kAdjusted, Variant::kOriginal},
        SyntheticCase{Formula::kAuto, Variant::kAdjusted, Variant::kOriginal}));

// SMOG depends on a and b only through a*sqrt(b); the fit must reach the
// minimum and the identifiable combination, not the individual values.
TEST(FitFormulaTest, SmogRecoversIdentifiableCombination) {
  const CoefficientSet truth =
      BuiltinCoefficients(Formula::kSmog, Variant::kAdjusted);
  std::mt19937_64 rng(321);
  const auto stats = testing::SyntheticStats(rng, 69);
  std::vector<double> grades;
  for (const auto &s : stats) grades.push_back(RawFormulaValue(s, truth));
  const FormulaFitResult fit = FitFormula(
      stats, grades, BuiltinCoefficients(Formula::kSmog, Variant::kOriginal));
  EXPECT_LT(fit.residual_sum_squares, 1e-12);
  EXPECT_GE(fit.coefficients.b, 0.0);
  EXPECT_LT(RelErr(fit.coefficients.a * std::sqrt(fit.coefficients.b),
                   truth.a * std::sqrt(truth.b)),
            1e-6);
  EXPECT_LT(RelErr(fit.coefficients.c, truth.c), 1e-6);
}

TEST(FitFormulaTest, NoisyRecoveryIsClose) {
  const CoefficientSet truth =
      BuiltinCoefficients(Formula::kFkgl, Variant::kAdjusted);
  std::mt19937_64 rng(20240601);
  const auto stats = testing::SyntheticStats(rng, 69);
  std::normal_distribution<double> noise(0.0, 0.1);
  std::vector<double> grades;
  for (const auto &s : stats) {
    grades.push_back(RawFormulaValue(s, truth) + noise(rng));
  }
  const FormulaFitResult fit = FitFormula(
      stats, grades, BuiltinCoefficients(Formula::kFkgl, Variant::kOriginal));
  EXPECT_LT(RelErr(fit.coefficients.a, truth.a), 0.05);
  EXPECT_LT(RelErr(fit.coefficients.b, truth.b), 0.05);
  EXPECT_LT(RelErr(fit.coefficients.c, truth.c), 0.05);
}

TEST(FitFormulaTest, AutoFitsTheUnroundedValue) {
  const CoefficientSet orig =
      BuiltinCoefficients(Formula::kAuto, Variant::kOriginal);
  TextStats s;
  s.words = 100;
  s.sentences = 5;
  s.letters = 450;
  EXPECT_NEAR(RawFormulaValue(s, orig), 9.765, 1e-12);
  EXPECT_EQ(ScoreFormula(s, orig).value, 10.0);
}

TEST(FitFormulaTest, InputErrors) {
  std::mt19937_64 rng(1);
  const auto stats = testing::SyntheticStats(rng, 5);
  const std::vector<double> grades(5, 3.0);
  const auto init = BuiltinCoefficients(Formula::kFkgl, Variant::kOriginal);
  EXPECT_EQ(CodeOf([&] {
              FitFormula(std::span(stats).first(2),
                         std::span(grades).first(2), init);
            }),
            ErrorCode::kTooFewItems);
  EXPECT_EQ(CodeOf([&] {
              FitFormula(stats, std::span(grades).first(4), init);
            }),
            ErrorCode::kLengthMismatch);
  auto broken = stats;
  broken[2].words = 0;
  EXPECT_EQ(CodeOf([&] { FitFormula(broken, grades, init); }),
            ErrorCode::kNonFiniteStats);
  std::vector<double> nan_grades = grades;
  nan_grades[0] = NAN;
  EXPECT_EQ(CodeOf([&] { FitFormula(stats, nan_grades, init); }),
            ErrorCode::kNonFiniteStats);
  CoefficientSet nerf = init;
  nerf.formula = Formula::kNerf;
  EXPECT_EQ(CodeOf([&] { FitFormula(stats, grades, nerf); }),
            ErrorCode::kWrongFormula);
}

TEST(FitNerfTest, NoiseFreeRecovery) {
  const NerfCoefficients truth{0.05, -0.2, 0.3, 0.15, 0.25, 1.2, -4.0,
                               Variant::kCustom};
  std::mt19937_64 rng(77);
  const auto features = testing::SyntheticNerfFeatures(rng, 69);
  std::vector<double> grades;
  for (const auto &f : features) grades.push_back(NerfScore(f, truth).value);
  const NerfFitResult fit = FitNerf(features, grades);
  EXPECT_FALSE(fit.rank_deficient);
  const auto got = NerfWeights(fit.coefficients);
  const auto want = NerfWeights(truth);
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(got[i], want[i], 1e-9) << i;
  }
  EXPECT_LT(fit.residual_sum_squares, 1e-18);
  EXPECT_EQ(fit.coefficients.variant, Variant::kCustom);
}

TEST(FitNerfTest, IdenticalItemsAreRankDeficient) {
  NerfFeatures f;
  f.aoa_sum = 20;
  f.familiarity_sum = 10;
  f.content_words = 3;
  f.noun_phrases = 2;
  f.tree_height_sum = 6;
  f.unique_words = 5;
  f.words = 6;
  f.sentences = 1;
  const std::vector<NerfFeatures> features(10, f);
  std::vector<double> grades;
  for (int i = 0; i < 10; ++i) grades.push_back(i % 2 == 0 ? 3.0 : 5.0);
  const NerfFitResult fit = FitNerf(features, grades);
  EXPECT_TRUE(fit.rank_deficient);
  // Every item gets the same prediction, so the best one is the mean.
  EXPECT_NEAR(NerfScore(f, fit.coefficients).value, 4.0, 1e-6);
}

TEST(FitNerfTest, TooFewItems) {
  std::mt19937_64 rng(2);
  const auto features = testing::SyntheticNerfFeatures(rng, 6);
  const std::vector<double> grades(6, 1.0);
  EXPECT_EQ(CodeOf([&] { FitNerf(features, grades); }),
            ErrorCode::kTooFewItems);
}

class CorpusDir {
 public:
  CorpusDir() : dir_(fs::temp_directory_path() / "readgauge_corpus_test") {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    std::ofstream(dir_ / "labels.csv") << "id,label\na,K1\nb,K6-8\n";
    std::ofstream(dir_ / "a.txt") << "A cat sat.";
    std::ofstream(dir_ / "b.txt") << "Photosynthesis converts energy.";
  }
  ~CorpusDir() { fs::remove_all(dir_); }
  const fs::path &path() const { return dir_; }

 private:
  fs::path dir_;
};

TEST(LoadCorpusTest, Directory) {
  CorpusDir dir;
  const LabeledCorpus corpus = LoadCorpus(dir.path());
  ASSERT_EQ(corpus.items.size(), 2u);
  EXPECT_EQ(corpus.items[1].id, "b");
  EXPECT_EQ(corpus.items[0].text, "A cat sat.");
  EXPECT_EQ(corpus.Grades(), (std::vector<double>{1.0, 7.0}));
}

TEST(LoadCorpusTest, DelimitedFile) {
  const LabeledCorpus corpus =
      LoadCorpus(fs::path(READGAUGE_TEST_DATA_DIR) / "corpus.csv");
  EXPECT_GE(corpus.items.size(), 12u);
  EXPECT_EQ(corpus.Grades().size(), corpus.items.size());
}

TEST(LoadCorpusTest, FitsFromCorpus) {
  const LabeledCorpus corpus =
      LoadCorpus(fs::path(READGAUGE_TEST_DATA_DIR) / "corpus.csv");
  const FormulaFitResult fit = FitFormula(corpus, Formula::kFkgl);
  EXPECT_LE(fit.residual_sum_squares, fit.initial_residual_sum_squares);
}

}  // namespace
}  // namespace readgauge
