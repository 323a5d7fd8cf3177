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
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "readgauge/error.h"
#include "readgauge/nerf.h"
#include "readgauge/syntax.h"

namespace readgauge {
namespace {

const std::filesystem::path kDataDir = READGAUGE_TEST_DATA_DIR;

Lexicon Mini(LexiconKind kind,
             std::vector<std::pair<std::string, double>> entries) {
  return Lexicon::FromEntries(kind, entries);
}

Lexicon MiniAoa() { return Mini(LexiconKind::kAgeOfAcquisition, {{"dog", 4.2}}); }
Lexicon MiniFam() {
  return Mini(LexiconKind::kFamiliarity,
              {{"dog", 3.9}, {"the", 4.1}, {"ran", 3.0}});
}

// The published equation written out independently of the library.
double HandNerf(const NerfFeatures &f) {
  const double s = static_cast<double>(f.sentences);
  return (0.04876 * f.aoa_sum - 0.1145 * f.familiarity_sum) / s +
         (0.3091 * f.content_words + 0.1866 * f.noun_phrases +
          0.2645 * f.tree_height_sum) / s +
         1.1017 * f.unique_words / std::sqrt(static_cast<double>(f.words)) -
         4.125;
}

TEST(DefaultNerfCoefficientsTest, PublishedValues) {
  const NerfCoefficients c = DefaultNerfCoefficients();
  EXPECT_EQ(c.w_aoa, 0.04876);
  EXPECT_EQ(c.w_fam, -0.1145);
  EXPECT_EQ(c.w_cw, 0.3091);
  EXPECT_EQ(c.w_np, 0.1866);
  EXPECT_EQ(c.w_th, 0.2645);
  EXPECT_EQ(c.w_ttr, 1.1017);
  EXPECT_EQ(c.bias, -4.125);
}

TEST(ExtractNerfFeaturesTest, DogRanWithTree) {
  const std::vector<ParseTree> trees = {
      ParseBracketed("(S (NP (DT the) (NN dog)) (VP (VBD ran)))")};
  const NerfFeatures f =
      ExtractNerfFeatures("The dog ran.", MiniAoa(), MiniFam(), trees);
  EXPECT_EQ(f.content_words, 2u);
  EXPECT_EQ(f.noun_phrases, 1u);
  EXPECT_EQ(f.tree_height_sum, 4u);
  EXPECT_DOUBLE_EQ(f.aoa_sum, 4.2);
  EXPECT_DOUBLE_EQ(f.familiarity_sum, 11.0);
  EXPECT_EQ(f.unique_words, 3u);
  EXPECT_EQ(f.words, 3u);
  EXPECT_EQ(f.sentences, 1u);
  EXPECT_FALSE(f.approximate_syntax);
  EXPECT_EQ(f.aoa_misses, 2u);
  EXPECT_EQ(f.familiarity_misses, 0u);
}

TEST(ExtractNerfFeaturesTest, EmptyLexiconsMissEverything) {
  const Lexicon aoa = Mini(LexiconKind::kAgeOfAcquisition, {});
  const Lexicon fam = Mini(LexiconKind::kFamiliarity, {});
  const NerfFeatures f = ExtractNerfFeatures("A cat sat down.", aoa, fam);
  EXPECT_EQ(f.aoa_sum, 0.0);
  EXPECT_EQ(f.familiarity_sum, 0.0);
  EXPECT_EQ(f.aoa_misses, f.words);
  EXPECT_EQ(f.familiarity_misses, f.words);
  EXPECT_TRUE(f.approximate_syntax);
}

TEST(ExtractNerfFeaturesTest, NoWordsIsAnError) {
  EXPECT_THROW(ExtractNerfFeatures("...", MiniAoa(), MiniFam()), Error);
}

TEST(ExtractNerfFeaturesTest, EachTreeIsASentence) {
  const std::vector<ParseTree> trees = {
      ParseBracketed("(S (NP (NN Dogs)) (VP (VBP run)))"),
      ParseBracketed("(S (NP (NNS cats)) (VP (VBP sit)))")};
  const NerfFeatures f =
      ExtractNerfFeatures("Dogs run; cats sit.", MiniAoa(), MiniFam(), trees);
  EXPECT_EQ(f.sentences, 2u);
  EXPECT_EQ(f.tree_height_sum, 8u);
  EXPECT_EQ(f.noun_phrases, 2u);
}

// Property: doubling the document doubles every count-valued feature.
TEST(ExtractNerfFeaturesTest, DoublingDoublesCounts) {
  const Lexicon aoa = Lexicon::Load(kDataDir / "lexicons/aoa.csv",
                                    LexiconKind::kAgeOfAcquisition);
  const Lexicon fam = Lexicon::Load(kDataDir / "lexicons/familiarity.csv",
                                    LexiconKind::kFamiliarity);
  const std::string doc =
      "The happy sister sat by the open window. Big ships carry boxes!";
  const NerfFeatures one = ExtractNerfFeatures(doc, aoa, fam);
  const NerfFeatures two = ExtractNerfFeatures(doc + " " + doc, aoa, fam);
  EXPECT_DOUBLE_EQ(two.aoa_sum, 2 * one.aoa_sum);
  EXPECT_DOUBLE_EQ(two.familiarity_sum, 2 * one.familiarity_sum);
  EXPECT_EQ(two.content_words, 2 * one.content_words);
  EXPECT_EQ(two.noun_phrases, 2 * one.noun_phrases);
  EXPECT_EQ(two.tree_height_sum, 2 * one.tree_height_sum);
  EXPECT_EQ(two.words, 2 * one.words);
  EXPECT_EQ(two.sentences, 2 * one.sentences);
  EXPECT_EQ(two.aoa_misses, 2 * one.aoa_misses);
  EXPECT_EQ(two.unique_words, one.unique_words);
}

TEST(NerfScoreTest, NearEmptyFeatures) {
  NerfFeatures f;
  f.unique_words = 1;
  f.words = 1;
  f.sentences = 1;
  EXPECT_NEAR(NerfScore(f).value, 1.1017 - 4.125, 1e-12);
}

TEST(NerfScoreTest, DogRanHandValue) {
  NerfFeatures f;
  f.aoa_sum = 4.2;
  f.familiarity_sum = 11.0;
  f.content_words = 2;
  f.noun_phrases = 1;
  f.tree_height_sum = 4;
  f.unique_words = 3;
  f.words = 3;
  f.sentences = 1;
  EXPECT_NEAR(NerfScore(f).value, -1.4087076253013677, 1e-9);
}

TEST(NerfScoreTest, ConstantFunction) {
  NerfCoefficients c{0, 0, 0, 0, 0, 0, 7.0, Variant::kCustom};
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    NerfFeatures f;
    f.aoa_sum = rng() % 100;
    f.words = 1 + rng() % 50;
    f.unique_words = f.words;
    f.sentences = 1 + rng() % 5;
    EXPECT_EQ(NerfScore(f, c).value, 7.0);
  }
}

TEST(NerfScoreTest, EmptyFeaturesAreAnError) {
  EXPECT_THROW(NerfScore(NerfFeatures{}), Error);
}

// Properties: the score is linear in the weights, agrees with the written-out
// equation and rises with every positively weighted feature.
TEST(NerfScoreTest, LinearityAndMonotonicity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    NerfFeatures f;
    f.sentences = 1 + rng() % 8;
    f.words = f.sentences * (4 + rng() % 20);
    f.unique_words = 1 + rng() % f.words;
    f.aoa_sum = f.words * 6 * u(rng);
    f.familiarity_sum = f.words * 3 * u(rng);
    f.content_words = rng() % f.words;
    f.noun_phrases = rng() % (3 * f.sentences);
    f.tree_height_sum = f.sentences * (3 + rng() % 10);
    const double base = NerfScore(f).value;
    EXPECT_NEAR(base, HandNerf(f), 1e-12);

    const auto r = NerfRegressors(f);
    const auto w = NerfWeights(DefaultNerfCoefficients());
    double dot = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) dot += r[k] * w[k];
    EXPECT_NEAR(base, dot, 1e-12);

    NerfFeatures more = f;
    more.content_words += 1;
    EXPECT_GT(NerfScore(more).value, base);
    more = f;
    more.tree_height_sum += 1;
    EXPECT_GT(NerfScore(more).value, base);
    more = f;
    more.familiarity_sum += 1.0;
    EXPECT_LT(NerfScore(more).value, base);
  }
}

TEST(NerfCoefficientsTest, WeightsRoundTrip) {
  const NerfCoefficients c = DefaultNerfCoefficients();
  const NerfCoefficients back = NerfCoefficientsFromWeights(NerfWeights(c));
  EXPECT_EQ(NerfWeights(back), NerfWeights(c));
}

TEST(NerfJsonTest, CoefficientsRoundTrip) {
  const auto json = NerfCoefficientsToJson(DefaultNerfCoefficients());
  EXPECT_EQ(json.begin().key(), "formula");
  EXPECT_EQ(json["formula"], "nerf");
  EXPECT_EQ(NerfCoefficientsFromJson(nlohmann::json::parse(json.dump())),
            DefaultNerfCoefficients());
  EXPECT_THROW(NerfCoefficientsFromJson(
                   nlohmann::json::parse(R"({"formula":"nerf","w_aoa":1})")),
               Error);
}

TEST(NerfJsonTest, FeatureKeysAreStable) {
  const auto json = NerfFeaturesToJson(NerfFeatures{});
  std::vector<std::string> keys;
  for (const auto &[k, v] : json.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "aoa_sum", "familiarity_sum", "content_words",
                      "noun_phrases", "tree_height_sum", "unique_words",
                      "words", "sentences", "approximate_syntax",
                      "aoa_misses", "familiarity_misses"}));
}

}  // namespace
}  // namespace readgauge
