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

// NERF: a linear readability model over lexical difficulty (age of
// acquisition and familiarity sums), syntactic complexity (content words,
// noun phrases, parse-tree height) and lexical richness (unique words over
// the square root of the word count).
//
//   NERF = (w_aoa * sum AoA + w_fam * sum Fam) / sentences
//        + (w_cw * content + w_np * NPs + w_th * sum height) / sentences
//        + w_ttr * unique / sqrt(words) + bias

#ifndef READGAUGE_NERF_H_
#define READGAUGE_NERF_H_

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include <nlohmann/json.hpp>

#include "readgauge/formulas.h"
#include "readgauge/lexicon.h"
#include "readgauge/syntax.h"
#include "readgauge/text.h"

namespace readgauge {

struct NerfFeatures {
  double aoa_sum = 0.0;
  double familiarity_sum = 0.0;
  std::size_t content_words = 0;
  std::size_t noun_phrases = 0;
  std::size_t tree_height_sum = 0;  // per-sentence heights, summed
  std::size_t unique_words = 0;
  std::size_t words = 0;
  std::size_t sentences = 0;
  bool approximate_syntax = false;  // heuristic syntax stood in for a parse
  // Word tokens absent from each lexicon.
  std::size_t aoa_misses = 0;
  std::size_t familiarity_misses = 0;

  bool operator==(const NerfFeatures &) const = default;
};

struct NerfCoefficients {
  double w_aoa = 0.04876;
  double w_fam = -0.1145;
  double w_cw = 0.3091;
  double w_np = 0.1866;
  double w_th = 0.2645;
  double w_ttr = 1.1017;
  double bias = -4.125;
  Variant variant = Variant::kOriginal;

  bool operator==(const NerfCoefficients &) const = default;
};

inline constexpr std::size_t kNerfParameterCount = 7;

NerfCoefficients DefaultNerfCoefficients();

// Weights in regressor order, bias last.
std::array<double, kNerfParameterCount> NerfWeights(const NerfCoefficients &c);
NerfCoefficients NerfCoefficientsFromWeights(
    std::span<const double, kNerfParameterCount> weights,
    Variant variant = Variant::kCustom);

// (aoa/s, fam/s, cw/s, np/s, th/s, unique/sqrt(words), 1): the score is the
// dot product of these with NerfWeights. Throws Error(kEmptyText) when
// words or sentences is zero.
std::array<double, kNerfParameterCount> NerfRegressors(const NerfFeatures &f);

struct NerfOptions {
  SegmenterOptions segmenter;
  LookupOptions lookup;
};

// Lexical sums cover every word token. With parses, each tree is one
// sentence: heights and NP counts come from the trees and POS tags from
// their preterminals (Error(kLeafMismatch) if the leaves do not spell the
// text). Without parses, sentences come from the segmenter and syntax from
// the heuristic tagger and chunker, and approximate_syntax is set.
// Throws Error(kEmptyText) when the text has no word token.
NerfFeatures ExtractNerfFeatures(std::string_view text, const Lexicon &aoa,
                                 const Lexicon &familiarity,
                                 std::span<const ParseTree> parses = {},
                                 const NerfOptions &options = {});

Score NerfScore(const NerfFeatures &features,
                const NerfCoefficients &coeffs = DefaultNerfCoefficients());

nlohmann::ordered_json NerfFeaturesToJson(const NerfFeatures &features);
nlohmann::ordered_json NerfCoefficientsToJson(const NerfCoefficients &coeffs);
NerfCoefficients NerfCoefficientsFromJson(const nlohmann::json &json);

}  // namespace readgauge

#endif  // READGAUGE_NERF_H_
