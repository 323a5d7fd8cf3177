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

#include "readgauge/nerf.h"

#include <cmath>
#include <string>
#include <unordered_set>

#include "readgauge/error.h"

namespace readgauge {

NerfCoefficients DefaultNerfCoefficients() { return NerfCoefficients{}; }

std::array<double, kNerfParameterCount> NerfWeights(const NerfCoefficients &c) {
  return {c.w_aoa, c.w_fam, c.w_cw, c.w_np, c.w_th, c.w_ttr, c.bias};
}

NerfCoefficients NerfCoefficientsFromWeights(
    std::span<const double, kNerfParameterCount> w, Variant variant) {
  return {w[0], w[1], w[2], w[3], w[4], w[5], w[6], variant};
}

std::array<double, kNerfParameterCount> NerfRegressors(const NerfFeatures &f) {
  if (f.words == 0 || f.sentences == 0) {
    throw Error(ErrorCode::kEmptyText,
                "NERF needs at least one word and one sentence");
  }
  const double sentences = static_cast<double>(f.sentences);
  return {f.aoa_sum / sentences,
          f.familiarity_sum / sentences,
          static_cast<double>(f.content_words) / sentences,
          static_cast<double>(f.noun_phrases) / sentences,
          static_cast<double>(f.tree_height_sum) / sentences,
          static_cast<double>(f.unique_words) /
              std::sqrt(static_cast<double>(f.words)),
          1.0};
}

NerfFeatures ExtractNerfFeatures(std::string_view text, const Lexicon &aoa,
                                 const Lexicon &familiarity,
                                 std::span<const ParseTree> parses,
                                 const NerfOptions &options) {
  const AnalyzedText analyzed = Analyze(text, options.segmenter);
  NerfFeatures f;
  std::unordered_set<std::string_view> unique;
  for (const Token &token : analyzed.tokens) {
    if (!token.is_word) continue;
    ++f.words;
    unique.insert(token.norm);
  }
  if (f.words == 0) {
    throw Error(ErrorCode::kEmptyText, "text contains no word token");
  }
  f.unique_words = unique.size();

  const LookupResult aoa_lookup = LookupSum(aoa, analyzed.tokens, options.lookup);
  const LookupResult fam_lookup =
      LookupSum(familiarity, analyzed.tokens, options.lookup);
  f.aoa_sum = aoa_lookup.sum;
  f.aoa_misses = aoa_lookup.misses;
  f.familiarity_sum = fam_lookup.sum;
  f.familiarity_misses = fam_lookup.misses;

  if (!parses.empty()) {
    f.content_words = CountContentWords(TagFromTrees(analyzed.tokens, parses));
    for (const ParseTree &tree : parses) {
      f.noun_phrases += CountNounPhrases(tree);
      f.tree_height_sum += TreeHeight(tree);
    }
    f.sentences = parses.size();
    return f;
  }

  f.approximate_syntax = true;
  f.sentences = analyzed.sentences.size();
  const std::span<const Token> tokens(analyzed.tokens);
  for (const SentenceSpan &span : analyzed.sentences) {
    const auto sentence = tokens.subspan(span.begin, span.end - span.begin);
    const PosTagging tagging = TagHeuristic(sentence);
    f.content_words += CountContentWords(tagging);
    const HeuristicSyntax syntax = EstimateSyntax(sentence);
    f.noun_phrases += syntax.noun_phrases;
    f.tree_height_sum += syntax.tree_height;
  }
  return f;
}

Score NerfScore(const NerfFeatures &features, const NerfCoefficients &coeffs) {
  const auto x = NerfRegressors(features);
  const double sentences = static_cast<double>(features.sentences);
  // Grouped as lexical + syntactic + richness + bias.
  const double lexical =
      (coeffs.w_aoa * features.aoa_sum +
       coeffs.w_fam * features.familiarity_sum) /
      sentences;
  const double syntactic =
      (coeffs.w_cw * static_cast<double>(features.content_words) +
       coeffs.w_np * static_cast<double>(features.noun_phrases) +
       coeffs.w_th * static_cast<double>(features.tree_height_sum)) /
      sentences;
  const double richness = coeffs.w_ttr * x[5];
  return {lexical + syntactic + richness + coeffs.bias, Formula::kNerf,
          coeffs.variant, false};
}

nlohmann::ordered_json NerfFeaturesToJson(const NerfFeatures &f) {
  nlohmann::ordered_json json;
  json["aoa_sum"] = f.aoa_sum;
  json["familiarity_sum"] = f.familiarity_sum;
  json["content_words"] = f.content_words;
  json["noun_phrases"] = f.noun_phrases;
  json["tree_height_sum"] = f.tree_height_sum;
  json["unique_words"] = f.unique_words;
  json["words"] = f.words;
  json["sentences"] = f.sentences;
  json["approximate_syntax"] = f.approximate_syntax;
  json["aoa_misses"] = f.aoa_misses;
  json["familiarity_misses"] = f.familiarity_misses;
  return json;
}

nlohmann::ordered_json NerfCoefficientsToJson(const NerfCoefficients &c) {
  nlohmann::ordered_json json;
  json["formula"] = "nerf";
  json["variant"] = VariantName(c.variant);
  json["w_aoa"] = c.w_aoa;
  json["w_fam"] = c.w_fam;
  json["w_cw"] = c.w_cw;
  json["w_np"] = c.w_np;
  json["w_th"] = c.w_th;
  json["w_ttr"] = c.w_ttr;
  json["bias"] = c.bias;
  return json;
}

NerfCoefficients NerfCoefficientsFromJson(const nlohmann::json &json) {
  if (!json.is_object() || json.value("formula", "") != "nerf") {
    throw Error(ErrorCode::kInvalidJson,
                "NERF coefficients need {\"formula\": \"nerf\", ...}");
  }
  NerfCoefficients c;
  c.variant = Variant::kCustom;
  try {
    if (json.contains("variant")) {
      const auto variant = ParseVariant(json.at("variant").get<std::string>());
      if (!variant) {
        throw Error(ErrorCode::kInvalidJson,
                    "unknown variant " + json.at("variant").dump());
      }
      c.variant = *variant;
    }
    for (auto [key, field] :
         {std::pair{"w_aoa", &c.w_aoa}, std::pair{"w_fam", &c.w_fam},
          std::pair{"w_cw", &c.w_cw}, std::pair{"w_np", &c.w_np},
          std::pair{"w_th", &c.w_th}, std::pair{"w_ttr", &c.w_ttr},
          std::pair{"bias", &c.bias}}) {
      if (!json.contains(key)) {
        throw Error(ErrorCode::kInvalidJson,
                    std::string("NERF coefficients lack '") + key + "'");
      }
      *field = json.at(key).get<double>();
      if (!std::isfinite(*field)) {
        throw Error(ErrorCode::kInvalidCoefficients,
                    std::string("non-finite ") + key);
      }
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kInvalidJson, e.what());
  }
  return c;
}

}  // namespace readgauge
