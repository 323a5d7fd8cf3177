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

// Agreement metrics against gold grades, simplification-ranking accuracy
// and the two feature-generalizability scoring schemes (rank bands and
// correlation bands).

#ifndef READGAUGE_EVALUATION_H_
#define READGAUGE_EVALUATION_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace readgauge {

// Errors: kEmptyInput, kLengthMismatch.
double MeanAbsoluteError(std::span<const double> predicted,
                         std::span<const double> truth);

// 1 - SS_res / SS_tot; negative when worse than predicting the mean.
// Errors: kEmptyInput, kLengthMismatch, kConstantTruth.
double R2Score(std::span<const double> predicted,
               std::span<const double> truth);

// Sample correlation, clamped to [-1, 1].
// Errors: kEmptyInput, kLengthMismatch, kConstantSeries.
double PearsonR(std::span<const double> x, std::span<const double> y);

// Versions run from most difficult to simplest.
struct PairedGroup {
  std::string id;
  std::vector<std::string> versions;
};

using TextScorer = std::function<double(std::string_view)>;

// True iff every score is strictly below the one before it.
bool StrictlyDecreasing(std::span<const double> scores);

// Fraction of groups whose scores strictly decrease along the versions.
// Ties are wrong. Errors: kEmptyGroups, kInvalidGroup (< 2 versions).
double RankAccuracy(std::span<const PairedGroup> groups,
                    const TextScorer &scorer);

// Fraction of (hard, easy) pairs with score(hard) > score(easy).
// Errors: kEmptyPairs.
double PairwiseAccuracy(
    std::span<const std::pair<std::string, std::string>> pairs,
    const TextScorer &scorer);

// JSON array of {"id": ..., "versions": [...]}. Errors: kInvalidJson,
// kInvalidGroup.
std::vector<PairedGroup> GroupsFromJson(const nlohmann::json &json);
std::vector<PairedGroup> LoadGroups(const std::filesystem::path &path);

// Absolute correlations, rows = features, columns = datasets.
struct FeatureTable {
  std::vector<std::string> features;
  std::vector<std::string> datasets;
  std::vector<std::vector<double>> values;  // [feature][dataset], in [0, 1]
};

// Delimited matrix: header "feature,<dataset>,...", one row per feature.
// Signed correlations are stored as absolute values. Errors:
// kInvalidFeatureTable (with the line), kFileUnreadable.
FeatureTable ParseFeatureTable(std::string_view content);
FeatureTable LoadFeatureTable(const std::filesystem::path &path);

// Rank 1-10 -> 10 points, 11-20 -> 9, ..., 91-100 -> 1, beyond -> 0.
int RankPoints(std::size_t rank);

// |r| in [0.9, 1] -> 10, [0.8, 0.9) -> 9, ..., [0, 0.1) -> 1.
int CorrelationPoints(double abs_r);

// Per dataset, features are ranked by descending correlation (ties by name)
// and rewarded with RankPoints; totals are summed over datasets.
std::map<std::string, int> ApproachAScores(const FeatureTable &table);

// Per dataset CorrelationPoints, summed over datasets.
std::map<std::string, int> ApproachBScores(const FeatureTable &table);

}  // namespace readgauge

#endif  // READGAUGE_EVALUATION_H_
