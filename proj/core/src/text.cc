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

#include "readgauge/text.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "readgauge/error.h"

namespace readgauge {
namespace {

struct CodePoint {
  char32_t value;
  std::size_t length;  // bytes consumed
};

CodePoint Decode(std::string_view text, std::size_t pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) return {lead, 1};
  std::size_t length = 0;
  char32_t value = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    value = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    value = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    value = lead & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (pos + length > text.size()) return {0xFFFD, 1};
  for (std::size_t i = 1; i < length; ++i) {
    const unsigned char cont = byte(pos + i);
    if ((cont & 0xC0) != 0x80) return {0xFFFD, 1};
    value = (value << 6) | (cont & 0x3F);
  }
  return {value, length};
}

void AppendUtf8(char32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool IsSpace(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0x00A0 || cp == 0x2009 || cp == 0x200B ||
         cp == 0x3000;
}

// Latin-1 Supplement and Latin Extended-A/B letters count as letters so that
// loanwords ("café", "naïve") stay one token.
bool IsLatinExtendedLetter(char32_t cp) {
  return cp >= 0x00C0 && cp <= 0x024F && cp != 0x00D7 && cp != 0x00F7;
}

bool IsAlnum(char32_t cp) {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
         (cp >= '0' && cp <= '9') || IsLatinExtendedLetter(cp);
}

bool IsApostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

bool IsHyphen(char32_t cp) {
  return cp == '-' || cp == 0x2010 || cp == 0x2011;
}

char32_t ToLower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 32;
  return cp;
}

bool IsUpper(char32_t cp) {
  return (cp >= 'A' && cp <= 'Z') ||
         (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7);
}

bool IsTerminator(const Token &token) {
  return !token.is_word &&
         (token.surface == "." || token.surface == "!" || token.surface == "?");
}

bool IsClosing(const Token &token) {
  static const std::unordered_set<std::string> kClosing = {
      "\"", "'", ")", "]", "}", "”", "’", "»"};
  return !token.is_word && kClosing.contains(token.surface);
}

bool StartsCapitalized(const Token &token) {
  return IsUpper(Decode(token.surface, 0).value);
}

std::size_t CodePointCount(std::string_view s) {
  std::size_t count = 0;
  for (std::size_t pos = 0; pos < s.size(); pos += Decode(s, pos).length) {
    ++count;
  }
  return count;
}

// Joins "e . g" style chains ending right before the period at index dot.
std::string AbbreviationCandidate(std::span<const Token> tokens,
                                  std::size_t dot) {
  if (dot == 0) return {};
  std::size_t word = dot - 1;
  if (!tokens[word].is_word || tokens[word].end != tokens[dot].begin) {
    return {};
  }
  std::string candidate = tokens[word].norm;
  while (word >= 2) {
    const Token &sep = tokens[word - 1];
    const Token &prev = tokens[word - 2];
    if (sep.surface != "." || !prev.is_word || prev.end != sep.begin ||
        sep.end != tokens[word].begin) {
      break;
    }
    candidate = prev.norm + "." + candidate;
    word -= 2;
  }
  return candidate;
}

}  // namespace

std::vector<std::string> DefaultAbbreviations() {
  return {"mr", "mrs", "dr", "ms", "st", "vs", "etc", "e.g", "i.e", "u.s",
          "fig", "no"};
}

std::string NormalizeNewlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const CodePoint cp = Decode(text, pos);
    if (IsSpace(cp.value)) {
      pos += cp.length;
      continue;
    }
    if (!IsAlnum(cp.value)) {
      Token token;
      token.surface = std::string(text.substr(pos, cp.length));
      token.begin = pos;
      token.end = pos + cp.length;
      tokens.push_back(std::move(token));
      pos += cp.length;
      continue;
    }
    Token token;
    token.is_word = true;
    token.begin = pos;
    while (pos < text.size()) {
      const CodePoint cur = Decode(text, pos);
      if (IsAlnum(cur.value)) {
        AppendUtf8(ToLower(cur.value), &token.norm);
        pos += cur.length;
        continue;
      }
      // A joiner is kept only when a letter or digit follows it directly.
      if (IsApostrophe(cur.value) || IsHyphen(cur.value)) {
        const std::size_t next = pos + cur.length;
        if (next < text.size() && IsAlnum(Decode(text, next).value)) {
          pos = next;
          continue;
        }
      }
      break;
    }
    token.end = pos;
    token.surface = std::string(text.substr(token.begin, pos - token.begin));
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<SentenceSpan> SplitSentences(std::span<const Token> tokens,
                                         const SegmenterOptions &options) {
  const std::unordered_set<std::string> abbreviations(
      options.abbreviations.begin(), options.abbreviations.end());
  std::vector<SentenceSpan> spans;
  std::size_t start = 0;
  bool has_word = false;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].is_word) {
      has_word = true;
      ++i;
      continue;
    }
    if (!IsTerminator(tokens[i])) {
      ++i;
      continue;
    }
    if (tokens[i].surface == "." &&
        abbreviations.contains(AbbreviationCandidate(tokens, i))) {
      ++i;
      continue;
    }
    std::size_t after = i + 1;
    while (after < tokens.size() &&
           (IsTerminator(tokens[after]) || IsClosing(tokens[after]))) {
      ++after;
    }
    std::size_t next_word = after;
    while (next_word < tokens.size() && !tokens[next_word].is_word) {
      ++next_word;
    }
    if (next_word < tokens.size() && StartsCapitalized(tokens[next_word]) &&
        has_word) {
      spans.push_back({start, after});
      start = after;
      has_word = false;
    }
    i = after;
  }
  if (start < tokens.size()) {
    if (has_word) {
      spans.push_back({start, tokens.size()});
    } else if (!spans.empty()) {
      spans.back().end = tokens.size();
    }
  }
  return spans;
}

int CountSyllables(std::string_view norm_word) {
  const auto is_vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' ||
           c == 'y';
  };
  const auto is_letter = [](char c) { return c >= 'a' && c <= 'z'; };
  if (!norm_word.empty() &&
      std::all_of(norm_word.begin(), norm_word.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    return 1;
  }
  int groups = 0;
  bool in_group = false;
  for (char c : norm_word) {
    const bool vowel = is_vowel(c);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  // Terminal silent 'e': the last group is a lone 'e' after a consonant,
  // and the word is not a consonant + "le" ending ("table").
  const std::size_t n = norm_word.size();
  if (groups > 1 && n >= 2 && norm_word[n - 1] == 'e' &&
      is_letter(norm_word[n - 2]) && !is_vowel(norm_word[n - 2])) {
    const bool consonant_le = norm_word[n - 2] == 'l' && n >= 3 &&
                              is_letter(norm_word[n - 3]) &&
                              !is_vowel(norm_word[n - 3]);
    if (!consonant_le) --groups;
  }
  return std::max(groups, 1);
}

std::size_t AnalyzedText::WordCount() const {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(),
                    [](const Token &t) { return t.is_word; }));
}

AnalyzedText Analyze(std::string_view text, const SegmenterOptions &options) {
  AnalyzedText analyzed;
  analyzed.tokens = Tokenize(NormalizeNewlines(text));
  analyzed.sentences = SplitSentences(analyzed.tokens, options);
  return analyzed;
}

TextStats ComputeTextStats(std::string_view text, const TextOptions &options) {
  return ComputeTextStats(Analyze(text, options.segmenter), options);
}

TextStats ComputeTextStats(const AnalyzedText &analyzed,
                           const TextOptions &options) {
  TextStats stats;
  std::unordered_set<std::string_view> unique;
  for (const Token &token : analyzed.tokens) {
    if (!token.is_word) continue;
    ++stats.words;
    const int syllables = CountSyllables(token.norm);
    stats.syllables += static_cast<std::size_t>(syllables);
    stats.letters += CodePointCount(token.norm);
    if (syllables >= options.difficult_min_syllables) ++stats.difficult_words;
    if (syllables >= options.polysyllable_min_syllables) {
      ++stats.polysyllable_words;
    }
    unique.insert(token.norm);
  }
  if (stats.words == 0) {
    throw Error(ErrorCode::kEmptyText, "text contains no word token");
  }
  stats.sentences = analyzed.sentences.size();
  stats.unique_words = unique.size();
  return stats;
}

double ReadTimeMinutes(const TextStats &stats, double wpm) {
  if (!(wpm > 0.0)) {
    throw Error(ErrorCode::kNonPositiveRate,
                "reading rate must be positive, got " + std::to_string(wpm));
  }
  return static_cast<double>(stats.words) / wpm;
}

}  // namespace readgauge
