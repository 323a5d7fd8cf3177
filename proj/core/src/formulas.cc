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

#include "readgauge/formulas.h"

#include <charconv>
#include <cmath>

#include "readgauge/error.h"

namespace readgauge {
namespace {

void CheckFormula(const CoefficientSet &coeffs, Formula expected) {
  if (coeffs.formula != expected) {
    throw Error(ErrorCode::kWrongFormula,
                std::string(FormulaName(coeffs.formula)) +
                    " coefficients passed to " +
                    std::string(FormulaName(expected)));
  }
}

void CheckStats(const TextStats &stats) {
  if (stats.words == 0 || stats.sentences == 0) {
    throw Error(ErrorCode::kEmptyText,
                "formula needs at least one word and one sentence");
  }
}

Score Make(double value, const CoefficientSet &coeffs) {
  return {value, coeffs.formula, coeffs.variant, false};
}

}  // namespace

std::string_view FormulaName(Formula formula) {
  switch (formula) {
    case Formula::kFkgl: return "fkgl";
    case Formula::kFogi: return "fogi";
    case Formula::kSmog: return "smog";
    case Formula::kCole: return "cole";
    case Formula::kAuto: return "auto";
    case Formula::kNerf: return "nerf";
  }
  return "";
}

std::optional<Formula> ParseFormula(std::string_view name) {
  for (Formula f : {Formula::kFkgl, Formula::kFogi, Formula::kSmog,
                    Formula::kCole, Formula::kAuto, Formula::kNerf}) {
    if (FormulaName(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kOriginal: return "original";
    case Variant::kAdjusted: return "adjusted";
    case Variant::kCustom: return "custom";
  }
  return "";
}

std::optional<Variant> ParseVariant(std::string_view name) {
  for (Variant v : {Variant::kOriginal, Variant::kAdjusted, Variant::kCustom}) {
    if (VariantName(v) == name) return v;
  }
  return std::nullopt;
}

CoefficientSet BuiltinCoefficients(Formula formula, Variant variant) {
  const bool original = variant == Variant::kOriginal;
  if (variant == Variant::kCustom || formula == Formula::kNerf) {
    throw Error(ErrorCode::kInvalidCoefficients,
                "no built-in " + std::string(VariantName(variant)) +
                    " coefficients for " + std::string(FormulaName(formula)));
  }
  switch (formula) {
    case Formula::kFkgl:
      return original ? CoefficientSet{formula, variant, 0.390, 11.80, -15.59}
                      : CoefficientSet{formula, variant, 0.1014, 20.89, -21.94};
    case Formula::kFogi:
      return original ? CoefficientSet{formula, variant, 0.4000, 100.0, 0.0000}
                      : CoefficientSet{formula, variant, 0.1229, 415.7, 1.866};
    case Formula::kSmog:
      return original ? CoefficientSet{formula, variant, 1.043, 30.00, 3.129}
                      : CoefficientSet{formula, variant, 2.694, 8.815, 3.367};
    case Formula::kCole:
      return original
                 ? CoefficientSet{formula, variant, 0.05880, -0.2960, -15.80}
                 : CoefficientSet{formula, variant, 0.03993, -0.4976, -5.747};
    case Formula::kAuto:
      return original ? CoefficientSet{formula, variant, 4.710, 0.5000, -21.43}
                      : CoefficientSet{formula, variant, 6.000, 0.1035, -19.61};
    case Formula::kNerf:
      break;
  }
  throw Error(ErrorCode::kInvalidCoefficients, "unknown formula");
}

Score Fkgl(const TextStats &stats, const CoefficientSet &coeffs) {
  CheckFormula(coeffs, Formula::kFkgl);
  CheckStats(stats);
  const double words = static_cast<double>(stats.words);
  return Make(coeffs.a * (words / static_cast<double>(stats.sentences)) +
                  coeffs.b * (static_cast<double>(stats.syllables) / words) +
                  coeffs.c,
              coeffs);
}

Score Fogi(const TextStats &stats, const CoefficientSet &coeffs) {
  CheckFormula(coeffs, Formula::kFogi);
  CheckStats(stats);
  const double words = static_cast<double>(stats.words);
  return Make(
      coeffs.a * (words / static_cast<double>(stats.sentences) +
                  coeffs.b * (static_cast<double>(stats.difficult_words) /
                              words)) +
          coeffs.c,
      coeffs);
}

Score Smog(const TextStats &stats, const CoefficientSet &coeffs) {
  CheckFormula(coeffs, Formula::kSmog);
  CheckStats(stats);
  const double radicand =
      coeffs.b * (static_cast<double>(stats.polysyllable_words) /
                  static_cast<double>(stats.sentences));
  if (radicand < 0.0) {
    throw Error(ErrorCode::kNegativeRadicand,
                "SMOG radicand " + FormatDecimal(radicand) + " is negative");
  }
  return Make(coeffs.a * std::sqrt(radicand) + coeffs.c, coeffs);
}

Score Cole(const TextStats &stats, const CoefficientSet &coeffs) {
  CheckFormula(coeffs, Formula::kCole);
  CheckStats(stats);
  const double words = static_cast<double>(stats.words);
  return Make(
      coeffs.a * 100.0 * (static_cast<double>(stats.letters) / words) +
          coeffs.b * 100.0 * (static_cast<double>(stats.sentences) / words) +
          coeffs.c,
      coeffs);
}

Score Auto(const TextStats &stats, const CoefficientSet &coeffs) {
  CheckFormula(coeffs, Formula::kAuto);
  CheckStats(stats);
  const double words = static_cast<double>(stats.words);
  Score score = Make(
      coeffs.a * (static_cast<double>(stats.letters) / words) +
          coeffs.b * (words / static_cast<double>(stats.sentences)) + coeffs.c,
      coeffs);
  if (coeffs.variant == Variant::kOriginal) {
    score.value = std::ceil(score.value);
    score.rounded = true;
  }
  return score;
}

Score ScoreFormula(const TextStats &stats, const CoefficientSet &coeffs) {
  switch (coeffs.formula) {
    case Formula::kFkgl: return Fkgl(stats, coeffs);
    case Formula::kFogi: return Fogi(stats, coeffs);
    case Formula::kSmog: return Smog(stats, coeffs);
    case Formula::kCole: return Cole(stats, coeffs);
    case Formula::kAuto: return Auto(stats, coeffs);
    case Formula::kNerf: break;
  }
  throw Error(ErrorCode::kWrongFormula,
              "NERF is not an (a, b, c) formula; use NerfScore");
}

nlohmann::ordered_json CoefficientsToJson(const CoefficientSet &coeffs) {
  nlohmann::ordered_json json;
  json["formula"] = FormulaName(coeffs.formula);
  json["variant"] = VariantName(coeffs.variant);
  json["a"] = coeffs.a;
  json["b"] = coeffs.b;
  json["c"] = coeffs.c;
  return json;
}

CoefficientSet CoefficientsFromJson(const nlohmann::json &json) {
  if (!json.is_object()) {
    throw Error(ErrorCode::kInvalidJson, "coefficient set must be an object");
  }
  for (const char *key : {"formula", "a", "b", "c"}) {
    if (!json.contains(key)) {
      throw Error(ErrorCode::kInvalidJson,
                  std::string("coefficient set lacks '") + key + "'");
    }
  }
  CoefficientSet coeffs;
  try {
    const auto formula = ParseFormula(json.at("formula").get<std::string>());
    if (!formula || *formula == Formula::kNerf) {
      throw Error(ErrorCode::kInvalidJson,
                  "unknown formula '" + json.at("formula").dump() + "'");
    }
    coeffs.formula = *formula;
    coeffs.variant = Variant::kCustom;
    if (json.contains("variant")) {
      const auto variant = ParseVariant(json.at("variant").get<std::string>());
      if (!variant) {
        throw Error(ErrorCode::kInvalidJson,
                    "unknown variant " + json.at("variant").dump());
      }
      coeffs.variant = *variant;
    }
    coeffs.a = json.at("a").get<double>();
    coeffs.b = json.at("b").get<double>();
    coeffs.c = json.at("c").get<double>();
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kInvalidJson, e.what());
  }
  if (!std::isfinite(coeffs.a) || !std::isfinite(coeffs.b) ||
      !std::isfinite(coeffs.c)) {
    throw Error(ErrorCode::kInvalidCoefficients, "non-finite coefficient");
  }
  if (coeffs.formula == Formula::kSmog && coeffs.b < 0.0) {
    throw Error(ErrorCode::kInvalidCoefficients, "SMOG requires b >= 0");
  }
  return coeffs;
}

std::string FormatDecimal(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

}  // namespace readgauge
