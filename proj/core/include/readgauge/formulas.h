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

// The five traditional grade-level formulas, each parameterized by an
// (a, b, c) coefficient triple:
//
//   FKGL = a * words/sentences + b * syllables/words + c
//   FOGI = a * (words/sentences + b * difficult/words) + c
//   SMOG = a * sqrt(b * polysyllables/sentences) + c
//   COLE = a * 100 * letters/words + b * 100 * sentences/words + c
//   AUTO = a * letters/words + b * words/sentences + c
//
// AUTO with the original coefficients is rounded up to the next integer.

#ifndef READGAUGE_FORMULAS_H_
#define READGAUGE_FORMULAS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "readgauge/text.h"

namespace readgauge {

enum class Formula { kFkgl, kFogi, kSmog, kCole, kAuto, kNerf };

inline constexpr std::array<Formula, 5> kTraditionalFormulas = {
    Formula::kFkgl, Formula::kFogi, Formula::kSmog, Formula::kCole,
    Formula::kAuto};

enum class Variant { kOriginal, kAdjusted, kCustom };

std::string_view FormulaName(Formula formula);  // "fkgl", ..., "nerf"
std::optional<Formula> ParseFormula(std::string_view name);
std::string_view VariantName(Variant variant);  // "original", ...
std::optional<Variant> ParseVariant(std::string_view name);

struct CoefficientSet {
  Formula formula = Formula::kFkgl;
  Variant variant = Variant::kOriginal;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  bool operator==(const CoefficientSet &) const = default;
};

// Published original and recalibrated values. Throws
// Error(kInvalidCoefficients) for kCustom or for NERF.
CoefficientSet BuiltinCoefficients(Formula formula, Variant variant);

// Grade-level output in U.S. school grades.
struct Score {
  double value = 0.0;
  Formula formula = Formula::kFkgl;
  Variant variant = Variant::kOriginal;
  bool rounded = false;  // only AUTO with original coefficients
};

// Each throws Error(kWrongFormula) when coeffs belong to another formula and
// Error(kEmptyText) when stats have no words or sentences.
Score Fkgl(const TextStats &stats, const CoefficientSet &coeffs);
Score Fogi(const TextStats &stats, const CoefficientSet &coeffs);
// Also throws Error(kNegativeRadicand).
Score Smog(const TextStats &stats, const CoefficientSet &coeffs);
Score Cole(const TextStats &stats, const CoefficientSet &coeffs);
Score Auto(const TextStats &stats, const CoefficientSet &coeffs);

// Dispatches on coeffs.formula.
Score ScoreFormula(const TextStats &stats, const CoefficientSet &coeffs);

// Coefficient sets as {"formula", "variant", "a", "b", "c"}.
nlohmann::ordered_json CoefficientsToJson(const CoefficientSet &coeffs);
// Throws Error(kInvalidJson) on missing keys or unknown names and
// Error(kInvalidCoefficients) on non-finite values or SMOG with b < 0.
CoefficientSet CoefficientsFromJson(const nlohmann::json &json);

// Shortest decimal that round-trips to the same double.
std::string FormatDecimal(double value);

}  // namespace readgauge

#endif  // READGAUGE_FORMULAS_H_
