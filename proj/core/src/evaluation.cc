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

#include "readgauge/evaluation.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>

#include "readgauge/delimited.h"
#include "readgauge/error.h"

namespace readgauge {
namespace {

void CheckPair(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "series lengths differ: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
  }
  if (a.empty()) throw Error(ErrorCode::kEmptyInput, "empty series");
}

double Mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

bool IsConstant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(),
                     [&](double x) { return x == v.front(); });
}

}  // namespace

double MeanAbsoluteError(std::span<const double> predicted,
                         std::span<const double> truth) {
  CheckPair(predicted, truth);
  double total = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    total += std::abs(predicted[i] - truth[i]);
  }
  return total / static_cast<double>(truth.size());
}

double R2Score(std::span<const double> predicted,
               std::span<const double> truth) {
  CheckPair(predicted, truth);
  if (IsConstant(truth)) {
    throw Error(ErrorCode::kConstantTruth, "r2 is undefined for constant truth");
  }
  const double mean = Mean(truth);
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    ss_res += (truth[i] - predicted[i]) * (truth[i] - predicted[i]);
    ss_tot += (truth[i] - mean) * (truth[i] - mean);
  }
  return 1.0 - ss_res / ss_tot;
}

double PearsonR(std::span<const double> x, std::span<const double> y) {
  CheckPair(x, y);
  if (IsConstant(x) || IsConstant(y)) {
    throw Error(ErrorCode::kConstantSeries,
                "correlation is undefined for a constant series");
  }
  const double mx = Mean(x);
  const double my = Mean(y);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

bool StrictlyDecreasing(std::span<const double> scores) {
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (!(scores[i] < scores[i - 1])) return false;
  }
  return true;
}

double RankAccuracy(std::span<const PairedGroup> groups,
                    const TextScorer &scorer) {
  if (groups.empty()) throw Error(ErrorCode::kEmptyGroups, "no groups");
  std::size_t correct = 0;
  std::vector<double> scores;
  for (const PairedGroup &group : groups) {
    if (group.versions.size() < 2) {
      throw Error(ErrorCode::kInvalidGroup,
                  "group '" + group.id + "' has fewer than 2 versions");
    }
    scores.clear();
    for (const std::string &text : group.versions) {
      scores.push_back(scorer(text));
    }
    if (StrictlyDecreasing(scores)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(groups.size());
}

double PairwiseAccuracy(
    std::span<const std::pair<std::string, std::string>> pairs,
    const TextScorer &scorer) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyPairs, "no pairs");
  std::size_t correct = 0;
  for (const auto &[hard, easy] : pairs) {
    if (scorer(hard) > scorer(easy)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(pairs.size());
}

std::vector<PairedGroup> GroupsFromJson(const nlohmann::json &json) {
  if (!json.is_array()) {
    throw Error(ErrorCode::kInvalidJson, "groups file must hold a JSON array");
  }
  std::vector<PairedGroup> groups;
  for (std::size_t i = 0; i < json.size(); ++i) {
    const auto &item = json[i];
    if (!item.is_object() || !item.contains("versions") ||
        !item["versions"].is_array()) {
      throw Error(ErrorCode::kInvalidJson,
                  "group " + std::to_string(i) + " lacks a versions array");
    }
    PairedGroup group;
    if (!item.contains("id")) {
      group.id = std::to_string(i);
    } else if (item["id"].is_string()) {
      group.id = item["id"].get<std::string>();
    } else {
      group.id = item["id"].dump();
    }
    for (const auto &version : item["versions"]) {
      if (!version.is_string()) {
        throw Error(ErrorCode::kInvalidJson,
                    "group '" + group.id + "' has a non-string version");
      }
      group.versions.push_back(version.get<std::string>());
    }
    if (group.versions.size() < 2) {
      throw Error(ErrorCode::kInvalidGroup,
                  "group '" + group.id + "' has fewer than 2 versions");
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

std::vector<PairedGroup> LoadGroups(const std::filesystem::path &path) {
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(ReadFile(path));
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::kInvalidJson, path.string() + ": " + e.what());
  }
  return GroupsFromJson(json);
}

FeatureTable ParseFeatureTable(std::string_view content) {
  const DelimitedTable raw = ParseDelimited(content);
  if (raw.header.size() < 2) {
    throw Error(ErrorCode::kInvalidFeatureTable,
                "line 1: need a feature column and at least one dataset");
  }
  FeatureTable table;
  table.datasets.assign(raw.header.begin() + 1, raw.header.end());
  std::set<std::string> seen;
  for (const auto &row : raw.rows) {
    const std::string where = "line " + std::to_string(row.line);
    if (row.fields.size() != raw.header.size()) {
      throw Error(ErrorCode::kInvalidFeatureTable,
                  where + ": expected " + std::to_string(raw.header.size()) +
                      " fields");
    }
    std::vector<double> values;
    for (std::size_t j = 1; j < row.fields.size(); ++j) {
      const std::string &field = row.fields[j];
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size() ||
          !std::isfinite(value) || std::abs(value) > 1.0) {
        throw Error(ErrorCode::kInvalidFeatureTable,
                    where + ": '" + field + "' is not a correlation");
      }
      values.push_back(std::abs(value));
    }
    if (!seen.insert(row.fields[0]).second) {
      throw Error(ErrorCode::kInvalidFeatureTable,
                  where + ": duplicate feature '" + row.fields[0] + "'");
    }
    table.features.push_back(row.fields[0]);
    table.values.push_back(std::move(values));
  }
  if (table.features.empty()) {
    throw Error(ErrorCode::kInvalidFeatureTable, "table has no features");
  }
  return table;
}

FeatureTable LoadFeatureTable(const std::filesystem::path &path) {
  try {
    return ParseFeatureTable(ReadFile(path));
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kFileUnreadable) throw;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

int RankPoints(std::size_t rank) {
  if (rank == 0 || rank > 100) return 0;
  return 10 - static_cast<int>((rank - 1) / 10);
}

int CorrelationPoints(double abs_r) {
  // Thresholds k / 10.0 equal the decimal literals 0.1 ... 0.9, so band
  // edges written in decimal land in the upper band.
  for (int k = 9; k >= 1; --k) {
    if (abs_r >= k / 10.0) return k + 1;
  }
  return 1;
}

std::map<std::string, int> ApproachAScores(const FeatureTable &table) {
  std::map<std::string, int> scores;
  for (const std::string &f : table.features) scores[f] = 0;
  std::vector<std::size_t> order(table.features.size());
  for (std::size_t d = 0; d < table.datasets.size(); ++d) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      if (table.values[x][d] != table.values[y][d]) {
        return table.values[x][d] > table.values[y][d];
      }
      return table.features[x] < table.features[y];
    });
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      scores[table.features[order[rank]]] += RankPoints(rank + 1);
    }
  }
  return scores;
}

std::map<std::string, int> ApproachBScores(const FeatureTable &table) {
  std::map<std::string, int> scores;
  for (std::size_t f = 0; f < table.features.size(); ++f) {
    int total = 0;
    for (double value : table.values[f]) total += CorrelationPoints(value);
    scores[table.features[f]] += total;
  }
  return scores;
}

}  // namespace readgauge
