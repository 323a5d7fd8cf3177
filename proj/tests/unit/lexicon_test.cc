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

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "readgauge/error.h"
#include "readgauge/lexicon.h"
#include "readgauge/text.h"

namespace readgauge {
namespace {

namespace fs = std::filesystem;

const fs::path kDataDir = READGAUGE_TEST_DATA_DIR;

class TempFile {
 public:
  TempFile(const std::string &name, const std::string &content)
      : path_(fs::temp_directory_path() / name) {
    std::ofstream(path_) << content;
  }
  ~TempFile() { fs::remove(path_); }
  const fs::path &path() const { return path_; }

 private:
  fs::path path_;
};

Lexicon DogLexicon() {
  const std::vector<std::pair<std::string, double>> entries = {{"dog", 4.2}};
  return Lexicon::FromEntries(LexiconKind::kAgeOfAcquisition, entries);
}

TEST(LexiconLoadTest, LoadsRows) {
  TempFile f("rg_lex_ok.csv", "word,value\ndog,4.2\ncat,3.9\n");
  const Lexicon lex = Lexicon::Load(f.path(), LexiconKind::kAgeOfAcquisition);
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.Find("dog"), 4.2);
  EXPECT_FALSE(lex.Find("cow").has_value());
  EXPECT_EQ(lex.kind(), LexiconKind::kAgeOfAcquisition);
}

TEST(LexiconLoadTest, FirstDuplicateWins) {
  TempFile f("rg_lex_dup.csv", "word,value\ndog,4.2\nDog,9.0\n");
  LexiconLoadReport report;
  const Lexicon lex =
      Lexicon::Load(f.path(), LexiconKind::kFamiliarity, {}, &report);
  EXPECT_EQ(lex.size(), 1u);
  EXPECT_EQ(report.duplicates, 1u);
  EXPECT_EQ(lex.Find("dog"), 4.2);
}

TEST(LexiconLoadTest, NanIsMalformedAndNamesTheLine) {
  TempFile f("rg_lex_nan.csv", "word,value\ncat,1\ndog,NaN\n");
  try {
    Lexicon::Load(f.path(), LexiconKind::kAgeOfAcquisition);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedRow);
    EXPECT_NE(std::string(e.what()).find(":3"), std::string::npos) << e.what();
  }
}

TEST(LexiconLoadTest, CustomColumnsAndTabs) {
  TempFile f("rg_lex_cols.tsv", "Word\tFreq\tLg10CD\ndog\t100\t3.9\n");
  const Lexicon lex = Lexicon::Load(f.path(), LexiconKind::kFamiliarity,
                                    {"Word", "Lg10CD"});
  EXPECT_EQ(lex.Find("dog"), 3.9);
}

TEST(LexiconLoadTest, NothingLoadedIsAnError) {
  TempFile f("rg_lex_empty.csv", "word,value\n");
  try {
    Lexicon::Load(f.path(), LexiconKind::kFamiliarity);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyLexicon);
  }
}

TEST(LexiconLoadTest, MultiWordEntriesAreSkipped) {
  TempFile f("rg_lex_multi.csv", "word,value\nice cream,5\ndog,4\n");
  LexiconLoadReport report;
  const Lexicon lex =
      Lexicon::Load(f.path(), LexiconKind::kAgeOfAcquisition, {}, &report);
  EXPECT_EQ(lex.size(), 1u);
  EXPECT_EQ(report.skipped, 1u);
}

TEST(LexiconLoadTest, KeysUseTokenNorms) {
  TempFile f("rg_lex_norm.csv", "word,value\nDon't,2.5\n");
  const Lexicon lex = Lexicon::Load(f.path(), LexiconKind::kAgeOfAcquisition);
  EXPECT_EQ(lex.Find("dont"), 2.5);
}

TEST(LexiconLoadTest, BundledMiniaturePairHasFiftyWordsEach) {
  EXPECT_EQ(Lexicon::Load(kDataDir / "lexicons/aoa.csv",
                          LexiconKind::kAgeOfAcquisition)
                .size(),
            50u);
  EXPECT_EQ(Lexicon::Load(kDataDir / "lexicons/familiarity.csv",
                          LexiconKind::kFamiliarity)
                .size(),
            50u);
}

TEST(LookupSumTest, RepeatedWordsAdd) {
  const LookupResult r = LookupSum(DogLexicon(), Tokenize("dog dog"));
  EXPECT_DOUBLE_EQ(r.sum, 8.4);
  EXPECT_EQ(r.hits, 2u);
  EXPECT_EQ(r.misses, 0u);
}

TEST(LookupSumTest, UnknownWordsContributeNothing) {
  const LookupResult r = LookupSum(DogLexicon(), Tokenize("otolaryngology"));
  EXPECT_EQ(r.sum, 0.0);
  EXPECT_EQ(r.misses, 1u);
}

TEST(LookupSumTest, EmptyTokensGiveZero) {
  const LookupResult r = LookupSum(DogLexicon(), std::vector<Token>{});
  EXPECT_EQ(r.sum, 0.0);
  EXPECT_EQ(r.hits, 0u);
  EXPECT_EQ(r.misses, 0u);
}

TEST(LookupSumTest, PunctuationIsIgnored) {
  const LookupResult r = LookupSum(DogLexicon(), Tokenize("dog, dog!"));
  EXPECT_EQ(r.hits + r.misses, 2u);
}

TEST(LookupSumTest, LemmaFallbackCanBeDisabled) {
  const Lexicon lex = DogLexicon();
  EXPECT_EQ(LookupSum(lex, Tokenize("dogs")).hits, 1u);
  LookupOptions strict;
  strict.lemma_fallback = false;
  EXPECT_EQ(LookupSum(lex, Tokenize("dogs"), strict).misses, 1u);
}

TEST(LemmaCandidatesTest, SuffixRules) {
  EXPECT_EQ(LemmaCandidates("ponies"), (std::vector<std::string>{"pony", "poni", "ponie"}));
  const auto baking = LemmaCandidates("baking");
  EXPECT_NE(std::find(baking.begin(), baking.end(), "bake"), baking.end());
  const auto walked = LemmaCandidates("walked");
  EXPECT_NE(std::find(walked.begin(), walked.end(), "walk"), walked.end());
  EXPECT_TRUE(LemmaCandidates("is").empty());
}

// Property: the sum over a concatenation is the sum of the parts.
TEST(LookupSumTest, Additivity) {
  const std::vector<std::pair<std::string, double>> entries = {
      {"dog", 4.2}, {"cat", 3.1}, {"run", 5.5}, {"the", 1.0}};
  const Lexicon lex =
      Lexicon::FromEntries(LexiconKind::kFamiliarity, entries);
  const std::vector<std::string> words = {"dog", "cat", "runs", "the",
                                          "zebra", "dogs", "running"};
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::string a, b;
    for (int i = 0; i < 5; ++i) a += words[pick(rng)] + " ";
    for (int i = 0; i < 7; ++i) b += words[pick(rng)] + " ";
    const auto ra = LookupSum(lex, Tokenize(a));
    const auto rb = LookupSum(lex, Tokenize(b));
    const auto rab = LookupSum(lex, Tokenize(a + b));
    EXPECT_DOUBLE_EQ(rab.sum, ra.sum + rb.sum);
    EXPECT_EQ(rab.hits, ra.hits + rb.hits);
    EXPECT_EQ(rab.misses, ra.misses + rb.misses);
  }
}

}  // namespace
}  // namespace readgauge
