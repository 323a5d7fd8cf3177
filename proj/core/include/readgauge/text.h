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

// Surface text pipeline: tokenization, sentence segmentation, syllable
// counting and the aggregate counts every readability formula consumes.

#ifndef READGAUGE_TEXT_H_
#define READGAUGE_TEXT_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace readgauge {

struct Token {
  std::string surface;  // original form
  std::string norm;     // lowercase, apostrophes and hyphens removed
  bool is_word = false;
  // Byte offsets into the newline-normalized text.
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Half-open range [begin, end) of token indices.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const SentenceSpan &) const = default;
};

struct TextStats {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
  std::size_t letters = 0;
  std::size_t difficult_words = 0;     // FOGI criterion
  std::size_t polysyllable_words = 0;  // SMOG criterion
  std::size_t unique_words = 0;

  bool operator==(const TextStats &) const = default;
};

std::vector<std::string> DefaultAbbreviations();

struct SegmenterOptions {
  // Lowercase, without the trailing period; interior periods are kept
  // ("e.g", "u.s").
  std::vector<std::string> abbreviations = DefaultAbbreviations();
};

struct TextOptions {
  SegmenterOptions segmenter;
  int difficult_min_syllables = 3;
  int polysyllable_min_syllables = 3;
};

// Converts "\r\n" and lone "\r" to "\n".
std::string NormalizeNewlines(std::string_view text);

// Word tokens are maximal runs of letters and digits, joined across single
// interior apostrophes or hyphens. Every other non-space code point becomes
// its own non-word token. Input is expected to be newline-normalized when
// offsets matter.
std::vector<Token> Tokenize(std::string_view text);

// A boundary follows '.', '!' or '?' (plus any trailing terminators and
// closing quotes/brackets) when the next word token is capitalized. A '.'
// that closes a listed abbreviation never ends a sentence. Every returned
// span holds at least one word token and together they cover all tokens.
std::vector<SentenceSpan> SplitSentences(std::span<const Token> tokens,
                                         const SegmenterOptions &options = {});

// Vowel-group heuristic over a normalized word. Never returns less than 1.
int CountSyllables(std::string_view norm_word);

// Tokens and sentence spans of one document.
struct AnalyzedText {
  std::vector<Token> tokens;
  std::vector<SentenceSpan> sentences;

  std::size_t WordCount() const;
};

AnalyzedText Analyze(std::string_view text, const SegmenterOptions &options = {});

// Throws Error(kEmptyText) if the text holds no word token.
TextStats ComputeTextStats(std::string_view text,
                           const TextOptions &options = {});
TextStats ComputeTextStats(const AnalyzedText &analyzed,
                           const TextOptions &options = {});

inline constexpr std::array<double, 3> kStandardReadingRates = {175.0, 240.0,
                                                                300.0};

// words / wpm, in minutes. Throws Error(kNonPositiveRate) for wpm <= 0.
double ReadTimeMinutes(const TextStats &stats, double wpm);

}  // namespace readgauge

#endif  // READGAUGE_TEXT_H_
