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

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "readgauge/error.h"
#include "readgauge/text.h"

namespace readgauge {
namespace {

std::vector<std::string> WordNorms(std::string_view text) {
  std::vector<std::string> norms;
  for (const Token &t : Tokenize(text)) {
    if (t.is_word) norms.push_back(t.norm);
  }
  return norms;
}

std::size_t SpanCount(std::string_view text) {
  const auto tokens = Tokenize(text);
  return SplitSentences(tokens).size();
}

TEST(TokenizeTest, SplitsWordsAndPunctuation) {
  const auto tokens = Tokenize("The dog ran.");
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_EQ(std::count_if(tokens.begin(), tokens.end(),
                          [](const Token &t) { return t.is_word; }),
            3);
  EXPECT_EQ(tokens[3].surface, ".");
  EXPECT_FALSE(tokens[3].is_word);
}

TEST(TokenizeTest, EmptyTextHasNoTokens) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize(" \n\t ").empty());
}

TEST(TokenizeTest, JoinersAreDroppedFromNorms) {
  EXPECT_EQ(WordNorms("it's rule-based"),
            (std::vector<std::string>{"its", "rulebased"}));
  EXPECT_EQ(WordNorms("it’s"), (std::vector<std::string>{"its"}));
}

TEST(TokenizeTest, LeadingAndTrailingJoinersAreNotPartOfWords) {
  EXPECT_EQ(WordNorms("'quoted' -dash- rock'n'roll"),
            (std::vector<std::string>{"quoted", "dash", "rocknroll"}));
}

TEST(TokenizeTest, LatinLettersStayInWords) {
  EXPECT_EQ(WordNorms("Café NAÏVE"),
            (std::vector<std::string>{"café", "naïve"}));
}

TEST(TokenizeTest, OffsetsPointBackIntoTheText) {
  const std::string text = "Hi, there!";
  for (const Token &t : Tokenize(text)) {
    EXPECT_EQ(text.substr(t.begin, t.end - t.begin), t.surface);
  }
}

TEST(SplitSentencesTest, TwoClauses) { EXPECT_EQ(SpanCount("A cat. A dog."), 2u); }

TEST(SplitSentencesTest, AbbreviationDoesNotEndSentence) {
  EXPECT_EQ(SpanCount("Dr. Lee slept."), 1u);
  EXPECT_EQ(SpanCount("Use tools, e.g. Hammers work."), 1u);
}

TEST(SplitSentencesTest, NoPunctuationIsOneSentence) {
  EXPECT_EQ(SpanCount("no punctuation here"), 1u);
}

TEST(SplitSentencesTest, LowercaseContinuationIsNotABoundary) {
  EXPECT_EQ(SpanCount("It costs 3.5 dollars. okay then"), 1u);
}

TEST(SplitSentencesTest, ClosingQuotesStayWithTheSentence) {
  const auto tokens = Tokenize("He said \"Stop!\" Then he left.");
  const auto spans = SplitSentences(tokens);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(tokens[spans[0].end - 1].surface, "\"");
}

TEST(SplitSentencesTest, CustomAbbreviations) {
  SegmenterOptions options;
  options.abbreviations = {"approx"};
  const auto tokens = Tokenize("It is approx. Ten metres. Dr. Who.");
  EXPECT_EQ(SplitSentences(tokens, options).size(), 3u);
}

// Property: spans are contiguous, cover every token and hold a word each.
TEST(SplitSentencesTest, SpansPartitionTokens) {
  const std::vector<std::string> texts = {
      "A cat. A dog.", "Dr. Lee slept. He woke! Why? Nobody knows...",
      "\"Quoted.\" Next one.", "... . !", "word", "Mr. and Mrs. Smith. Yes."};
  for (const std::string &text : texts) {
    const auto tokens = Tokenize(text);
    const auto spans = SplitSentences(tokens);
    if (tokens.empty()) {
      EXPECT_TRUE(spans.empty());
      continue;
    }
    const bool has_word = std::any_of(tokens.begin(), tokens.end(),
                                      [](const Token &t) { return t.is_word; });
    if (!has_word) continue;
    ASSERT_FALSE(spans.empty()) << text;
    EXPECT_EQ(spans.front().begin, 0u) << text;
    EXPECT_EQ(spans.back().end, tokens.size()) << text;
    for (std::size_t i = 0; i < spans.size(); ++i) {
      if (i > 0) {
        EXPECT_EQ(spans[i].begin, spans[i - 1].end) << text;
      }
      EXPECT_TRUE(std::any_of(tokens.begin() + spans[i].begin,
                              tokens.begin() + spans[i].end,
                              [](const Token &t) { return t.is_word; }))
          << text;
    }
  }
}

TEST(CountSyllablesTest, PublishedAndHandExamples) {
  EXPECT_EQ(CountSyllables("banana"), 3);
  EXPECT_EQ(CountSyllables("the"), 1);
  EXPECT_EQ(CountSyllables("readability"), 5);
}

// Words where the heuristic agrees with the CMU pronouncing dictionary
// (tests/oracles/fixtures.py uses the same dictionary).
TEST(CountSyllablesTest, AgreesWithPronouncingDictionary) {
  const std::vector<std::pair<std::string, int>> cmu = {
      {"table", 2},   {"cake", 1},      {"syllable", 3}, {"hello", 2},
      {"education", 4}, {"whale", 1},   {"agree", 2},    {"simple", 2},
      {"beautiful", 3}, {"cat", 1},     {"queue", 1},
      {"ocean", 2},   {"rule", 1},
      {"time", 1},    {"little", 2},    {"apple", 2},    {"people", 2}};
  for (const auto &[word, want] : cmu) {
    EXPECT_EQ(CountSyllables(word), want) << word;
  }
}

// Known disagreements with the dictionary, pinned at the heuristic's value.
TEST(CountSyllablesTest, HeuristicLimits) {
  EXPECT_EQ(CountSyllables("rhythm"), 1);   // dictionary: 2
  EXPECT_EQ(CountSyllables("poem"), 1);     // dictionary: 2
  EXPECT_EQ(CountSyllables("created"), 2);  // dictionary: 3
  EXPECT_EQ(CountSyllables("likely"), 3);   // dictionary: 2
  EXPECT_EQ(CountSyllables("science"), 1);  // dictionary: 2
  EXPECT_EQ(CountSyllables("based"), 2);    // dictionary: 1
}

TEST(CountSyllablesTest, FloorAndDigits) {
  EXPECT_EQ(CountSyllables("hmm"), 1);
  EXPECT_EQ(CountSyllables("1999"), 1);
  EXPECT_EQ(CountSyllables("e"), 1);
}

TEST(ComputeTextStatsTest, SmallSentence) {
  const TextStats s = ComputeTextStats("A cat sat.");
  EXPECT_EQ(s.words, 3u);
  EXPECT_EQ(s.sentences, 1u);
  EXPECT_EQ(s.syllables, 3u);
  EXPECT_EQ(s.letters, 7u);
}

TEST(ComputeTextStatsTest, UniqueAndDifficultWords) {
  const TextStats s = ComputeTextStats("Banana banana.");
  EXPECT_EQ(s.unique_words, 1u);
  EXPECT_EQ(s.difficult_words, 2u);
  EXPECT_EQ(s.polysyllable_words, 2u);
}

TEST(ComputeTextStatsTest, ThresholdsAreConfigurable) {
  TextOptions options;
  options.polysyllable_min_syllables = 4;
  const TextStats s = ComputeTextStats("Banana banana.", options);
  EXPECT_EQ(s.polysyllable_words, 0u);
  EXPECT_EQ(s.difficult_words, 2u);
}

TEST(ComputeTextStatsTest, EmptyTextIsAnError) {
  try {
    ComputeTextStats("");
    FAIL() << "expected EmptyText";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyText);
  }
  EXPECT_THROW(ComputeTextStats(" ... "), Error);
}

// Property: concatenating a document with itself doubles every count except
// the unique-word count.
TEST(ComputeTextStatsTest, DoublingDoublesCounts) {
  const std::string doc =
      "The quick brown fox jumps over the lazy dog. Dr. Smith agreed! "
      "Was it beautiful? Perhaps.";
  const TextStats one = ComputeTextStats(doc);
  const TextStats two = ComputeTextStats(doc + " " + doc);
  EXPECT_EQ(two.words, 2 * one.words);
  EXPECT_EQ(two.sentences, 2 * one.sentences);
  EXPECT_EQ(two.syllables, 2 * one.syllables);
  EXPECT_EQ(two.letters, 2 * one.letters);
  EXPECT_EQ(two.difficult_words, 2 * one.difficult_words);
  EXPECT_EQ(two.polysyllable_words, 2 * one.polysyllable_words);
  EXPECT_EQ(two.unique_words, one.unique_words);
}

TEST(ComputeTextStatsTest, NewlineStylesAgree) {
  EXPECT_EQ(ComputeTextStats("One line.\r\nTwo line."),
            ComputeTextStats("One line.\nTwo line."));
  EXPECT_EQ(NormalizeNewlines("a\r\nb\rc"), "a\nb\nc");
}

TEST(ReadTimeTest, ExactDivisions) {
  TextStats s;
  s.words = 480;
  EXPECT_EQ(ReadTimeMinutes(s, 240.0), 2.0);
  s.words = 175;
  EXPECT_EQ(ReadTimeMinutes(s, 175.0), 1.0);
  s.words = 100;
  EXPECT_DOUBLE_EQ(ReadTimeMinutes(s, 300.0), 1.0 / 3.0);
}

TEST(ReadTimeTest, StandardRatesAreAccepted) {
  TextStats s;
  s.words = 600;
  for (double wpm : kStandardReadingRates) {
    EXPECT_DOUBLE_EQ(ReadTimeMinutes(s, wpm), 600.0 / wpm);
  }
}

TEST(ReadTimeTest, RejectsNonPositiveRates) {
  TextStats s;
  s.words = 10;
  for (double wpm : {0.0, -240.0}) {
    try {
      ReadTimeMinutes(s, wpm);
      FAIL() << "expected NonPositiveRate";
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kNonPositiveRate);
    }
  }
}

}  // namespace
}  // namespace readgauge
