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

#include "readgauge/error.h"

namespace readgauge {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kNonPositiveRate: return "NonPositiveRate";
    case ErrorCode::kFileUnreadable: return "FileUnreadable";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kEmptyLexicon: return "EmptyLexicon";
    case ErrorCode::kUnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorCode::kEmptyNode: return "EmptyNode";
    case ErrorCode::kMalformedTree: return "MalformedTree";
    case ErrorCode::kLeafMismatch: return "LeafMismatch";
    case ErrorCode::kWrongFormula: return "WrongFormula";
    case ErrorCode::kNegativeRadicand: return "NegativeRadicand";
    case ErrorCode::kInvalidCoefficients: return "InvalidCoefficients";
    case ErrorCode::kUnknownBand: return "UnknownBand";
    case ErrorCode::kTooFewItems: return "TooFewItems";
    case ErrorCode::kNonFiniteStats: return "NonFiniteStats";
    case ErrorCode::kDivergedFit: return "DivergedFit";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kConstantTruth: return "ConstantTruth";
    case ErrorCode::kConstantSeries: return "ConstantSeries";
    case ErrorCode::kEmptyGroups: return "EmptyGroups";
    case ErrorCode::kEmptyPairs: return "EmptyPairs";
    case ErrorCode::kInvalidGroup: return "InvalidGroup";
    case ErrorCode::kInvalidFeatureTable: return "InvalidFeatureTable";
    case ErrorCode::kInvalidJson: return "InvalidJson";
  }
  return "Unknown";
}

}  // namespace readgauge
