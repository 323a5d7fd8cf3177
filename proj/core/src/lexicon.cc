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

#include "readgauge/lexicon.h"

#include <charconv>
#include <cmath>

#include "readgauge/delimited.h"
#include "readgauge/error.h"

namespace readgauge {
namespace {

// Lexicon keys go through the tokenizer so that they match token norms
// ("Ice-cream" -> "icecream"). Returns nullopt for multi-token entries.
std::optional<std::string> NormalizeEntry(std::string_view word) {
  const std::vector<Token> tokens = Tokenize(word);
  if (tokens.size() != 1 || !tokens[0].is_word) return std::nullopt;
  return tokens[0].norm;
}

std::optional<double> ParseNumber(std::string_view text) {
  double value = 0.0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

bool ValidValue(LexiconKind kind, double value) {
  if (!std::isfinite(value)) return false;
  return kind == LexiconKind::kAgeOfAcquisition ? value > 0.0 : value >= 0.0;
}

}  // namespace

std::string_view LexiconKindName(LexiconKind kind) {
  return kind == LexiconKind::kAgeOfAcquisition ? "aoa" : "familiarity";
}

bool Lexicon::Insert(std::string key, double value) {
  return entries_.emplace(std::move(key), value).second;
}

Lexicon Lexicon::Load(const std::filesystem::path &path, LexiconKind kind,
                      const LexiconColumns &columns,
                      LexiconLoadReport *report) {
  const DelimitedTable table = ReadDelimitedFile(path);
  const auto word_col = table.Column(columns.word);
  const auto value_col = table.Column(columns.value);
  if (!word_col || !value_col) {
    throw Error(ErrorCode::kMalformedRow,
                path.string() + ":1: header lacks column '" +
                    (word_col ? columns.value : columns.word) + "'");
  }
  Lexicon lexicon(kind);
  LexiconLoadReport local;
  for (const auto &row : table.rows) {
    ++local.rows;
    const auto where = path.string() + ":" + std::to_string(row.line);
    if (row.fields.size() <= std::max(*word_col, *value_col)) {
      throw Error(ErrorCode::kMalformedRow, where + ": missing columns");
    }
    const std::string &word = row.fields[*word_col];
    if (word.empty()) {
      throw Error(ErrorCode::kMalformedRow, where + ": empty word");
    }
    const auto value = ParseNumber(row.fields[*value_col]);
    if (!value || !ValidValue(kind, *value)) {
      throw Error(ErrorCode::kMalformedRow,
                  where + ": invalid " + std::string(LexiconKindName(kind)) +
                      " value '" + row.fields[*value_col] + "'");
    }
    auto key = NormalizeEntry(word);
    if (!key) {
      ++local.skipped;
      continue;
    }
    if (!lexicon.Insert(std::move(*key), *value)) ++local.duplicates;
  }
  if (lexicon.empty()) {
    throw Error(ErrorCode::kEmptyLexicon,
                path.string() + ": no valid lexicon entries");
  }
  if (report != nullptr) *report = local;
  return lexicon;
}

Lexicon Lexicon::FromEntries(
    LexiconKind kind, std::span<const std::pair<std::string, double>> entries,
    LexiconLoadReport *report) {
  Lexicon lexicon(kind);
  LexiconLoadReport local;
  for (const auto &[word, value] : entries) {
    ++local.rows;
    if (word.empty() || !ValidValue(kind, value)) {
      throw Error(ErrorCode::kMalformedRow,
                  "entry " + std::to_string(local.rows) + " ('" + word +
                      "') is invalid");
    }
    auto key = NormalizeEntry(word);
    if (!key) {
      ++local.skipped;
      continue;
    }
    if (!lexicon.Insert(std::move(*key), value)) ++local.duplicates;
  }
  if (report != nullptr) *report = local;
  return lexicon;
}

std::optional<double> Lexicon::Find(std::string_view norm) const {
  const auto it = entries_.find(norm);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> LemmaCandidates(std::string_view norm) {
  std::vector<std::string> out;
  const auto strip = [&](std::string_view suffix, std::string_view repl) {
    // Keep at least two characters of stem.
    if (norm.size() >= suffix.size() + 2 && norm.ends_with(suffix)) {
      out.push_back(std::string(norm.substr(0, norm.size() - suffix.size())) +
                    std::string(repl));
    }
  };
  strip("ies", "y");
  strip("es", "");
  if (!norm.ends_with("ss")) strip("s", "");
  strip("ed", "");
  strip("ed", "e");
  strip("ing", "");
  strip("ing", "e");
  return out;
}

LookupResult LookupSum(const Lexicon &lexicon, std::span<const Token> tokens,
                       const LookupOptions &options) {
  LookupResult result;
  for (const Token &token : tokens) {
    if (!token.is_word) continue;
    std::optional<double> value = lexicon.Find(token.norm);
    if (!value && options.lemma_fallback) {
      for (const std::string &lemma : LemmaCandidates(token.norm)) {
        value = lexicon.Find(lemma);
        if (value) break;
      }
    }
    if (value) {
      result.sum += *value;
      ++result.hits;
    } else {
      ++result.misses;
    }
  }
  return result;
}

}  // namespace readgauge
