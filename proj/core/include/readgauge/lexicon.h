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

// Word-level psycholinguistic lexicons (age of acquisition, familiarity).

#ifndef READGAUGE_LEXICON_H_
#define READGAUGE_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "readgauge/text.h"

namespace readgauge {

enum class LexiconKind {
  kAgeOfAcquisition,  // years, > 0
  kFamiliarity,       // Lg10CD, >= 0
};

std::string_view LexiconKindName(LexiconKind kind);

struct LexiconColumns {
  std::string word = "word";
  std::string value = "value";
};

struct LexiconLoadReport {
  std::size_t rows = 0;        // data rows read
  std::size_t duplicates = 0;  // later rows dropped in favour of the first
  std::size_t skipped = 0;     // multi-word entries that can never match
};

class Lexicon {
 public:
  // Loads a comma- or tab-delimited table with a header row. Errors:
  // kFileUnreadable, kMalformedRow (with the line), kEmptyLexicon.
  static Lexicon Load(const std::filesystem::path &path, LexiconKind kind,
                      const LexiconColumns &columns = {},
                      LexiconLoadReport *report = nullptr);

  // In-memory construction with the same validation and first-wins rule.
  // An empty entry list is allowed here.
  static Lexicon FromEntries(
      LexiconKind kind,
      std::span<const std::pair<std::string, double>> entries,
      LexiconLoadReport *report = nullptr);

  LexiconKind kind() const { return kind_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Exact lookup of a normalized word.
  std::optional<double> Find(std::string_view norm) const;

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  explicit Lexicon(LexiconKind kind) : kind_(kind) {}

  // Returns false if the word was already present.
  bool Insert(std::string key, double value);

  LexiconKind kind_;
  std::unordered_map<std::string, double, Hash, std::equal_to<>> entries_;
};

struct LookupOptions {
  // On a miss, retry with naive suffix-stripped lemmas (see LemmaCandidates).
  bool lemma_fallback = true;
};

struct LookupResult {
  double sum = 0.0;
  std::size_t hits = 0;
  std::size_t misses = 0;
};

// Candidate base forms for a normalized word, most specific first:
// -ies -> -y, -es, -s, -ed, -ed -> -e, -ing, -ing -> -e.
std::vector<std::string> LemmaCandidates(std::string_view norm);

// Sums lexicon values over word tokens. Out-of-vocabulary words add nothing
// and count as misses; non-word tokens are ignored.
LookupResult LookupSum(const Lexicon &lexicon, std::span<const Token> tokens,
                       const LookupOptions &options = {});

}  // namespace readgauge

#endif  // READGAUGE_LEXICON_H_
