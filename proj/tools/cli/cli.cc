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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "readgauge/readgauge.h"

namespace readgauge::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kScore, kFeatures, kCalibrate, kEvaluate, kRank, kReadTime };
enum class OutputFormat { kJson, kCsv, kText };

struct RunConfig {
  Command command = Command::kScore;
  std::string formulas;  // comma list, "all", or empty for the default
  Variant variant = Variant::kAdjusted;
  std::string coeffs_path;
  std::string parses_path;
  std::vector<std::string> inputs;
  std::string corpus_path;
  std::string groups_path;
  std::string feature_table_path;
  std::string aoa_path;
  std::string familiarity_path;
  std::string lex_word_col = "word";
  std::string lex_value_col = "value";
  bool no_lemma_fallback = false;
  OutputFormat format = OutputFormat::kJson;
  std::string wpm = "175,240,300";
  std::string output_path;
  double holdout = 0.0;
  bool pairwise = false;
  unsigned jobs = 0;
};

struct Document {
  std::string id;
  std::string text;
  std::string label;
};

// Runs fn(i) for i in [0, n) on up to jobs threads. The exception of the
// lowest failing index is rethrown after all workers finish.
template <typename Fn>
void ParallelFor(std::size_t n, unsigned jobs, Fn &&fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(jobs, n);
  std::vector<std::exception_ptr> errors(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto &error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

std::vector<Formula> SelectFormulas(const RunConfig &config,
                                    std::string_view fallback) {
  const std::string list = config.formulas.empty() ? std::string(fallback)
                                                   : config.formulas;
  std::vector<Formula> formulas;
  std::stringstream stream(list);
  std::string name;
  while (std::getline(stream, name, ',')) {
    if (name == "all") {
      for (Formula f : kTraditionalFormulas) formulas.push_back(f);
      formulas.push_back(Formula::kNerf);
      continue;
    }
    const auto formula = ParseFormula(name);
    if (!formula) throw UsageError("--formula: unknown formula '" + name + "'");
    formulas.push_back(*formula);
  }
  if (formulas.empty()) throw UsageError("--formula: no formula given");
  std::vector<Formula> unique;
  for (Formula f : formulas) {
    if (std::find(unique.begin(), unique.end(), f) == unique.end()) {
      unique.push_back(f);
    }
  }
  return unique;
}

Formula SingleFormula(const RunConfig &config, std::string_view fallback) {
  const auto formulas = SelectFormulas(config, fallback);
  if (formulas.size() != 1) {
    throw UsageError("--formula: this command takes exactly one formula");
  }
  return formulas.front();
}

std::string ReadStream(std::istream &in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Document> LoadDocuments(const RunConfig &config, std::istream &in) {
  std::vector<Document> docs;
  if (!config.corpus_path.empty()) {
    for (auto &item : LoadCorpus(config.corpus_path).items) {
      docs.push_back({std::move(item.id), std::move(item.text),
                      std::move(item.label)});
    }
  }
  for (const std::string &input : config.inputs) {
    if (input == "-") {
      docs.push_back({"stdin", ReadStream(in), ""});
      continue;
    }
    const fs::path path(input);
    if (fs::is_directory(path)) {
      std::vector<fs::path> files;
      for (const auto &entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      for (const auto &file : files) {
        docs.push_back({file.stem().string(), ReadFile(file), ""});
      }
      continue;
    }
    docs.push_back({path.stem().string(), ReadFile(path), ""});
  }
  if (docs.empty()) throw UsageError("no input: pass --input or --corpus");
  return docs;
}

struct Lexicons {
  Lexicon aoa;
  Lexicon familiarity;
};

fs::path FindLexiconFile(const fs::path &dir, std::string_view stem) {
  for (const char *ext : {".csv", ".tsv"}) {
    const fs::path candidate = dir / (std::string(stem) + ext);
    if (fs::exists(candidate)) return candidate;
  }
  throw UsageError(std::string(kLexiconDirEnv) + "=" + dir.string() +
                   " has no " + std::string(stem) + ".csv or " +
                   std::string(stem) + ".tsv");
}

Lexicons LoadLexicons(const RunConfig &config, std::ostream &err) {
  fs::path aoa_path = config.aoa_path;
  fs::path fam_path = config.familiarity_path;
  if (aoa_path.empty() || fam_path.empty()) {
    const char *dir = std::getenv(kLexiconDirEnv);
    if (dir == nullptr || *dir == '\0') {
      throw UsageError(
          "NERF needs age-of-acquisition and familiarity lexicons: pass "
          "--aoa and --familiarity or set " +
          std::string(kLexiconDirEnv) +
          " to a directory holding aoa.csv and familiarity.csv");
    }
    if (aoa_path.empty()) aoa_path = FindLexiconFile(dir, "aoa");
    if (fam_path.empty()) fam_path = FindLexiconFile(dir, "familiarity");
  }
  const LexiconColumns columns{config.lex_word_col, config.lex_value_col};
  LexiconLoadReport aoa_report;
  LexiconLoadReport fam_report;
  Lexicons lexicons{
      Lexicon::Load(aoa_path, LexiconKind::kAgeOfAcquisition, columns,
                    &aoa_report),
      Lexicon::Load(fam_path, LexiconKind::kFamiliarity, columns,
                    &fam_report)};
  for (const auto &[path, report] :
       {std::pair{aoa_path, aoa_report}, std::pair{fam_path, fam_report}}) {
    if (report.duplicates > 0) {
      err << "warning: " << path.string() << ": " << report.duplicates
          << " duplicate word(s) ignored\n";
    }
  }
  return lexicons;
}

std::vector<std::vector<ParseTree>> LoadParses(const RunConfig &config,
                                               std::size_t documents) {
  if (config.parses_path.empty()) return {};
  auto parses = ParseSidecar(ReadFile(config.parses_path));
  if (parses.size() != documents) {
    throw Error(ErrorCode::kMalformedTree,
                config.parses_path + ": " + std::to_string(parses.size()) +
                    " parsed document(s) for " + std::to_string(documents) +
                    " input document(s)");
  }
  return parses;
}

struct CoefficientOverrides {
  std::vector<CoefficientSet> traditional;
  std::optional<NerfCoefficients> nerf;
};

CoefficientOverrides LoadOverrides(const RunConfig &config) {
  CoefficientOverrides overrides;
  if (config.coeffs_path.empty()) return overrides;
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(ReadFile(config.coeffs_path));
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(ErrorCode::kInvalidJson, config.coeffs_path + ": " + e.what());
  }
  const auto add = [&](const nlohmann::json &item) {
    if (item.is_object() && item.value("formula", "") == "nerf") {
      overrides.nerf = NerfCoefficientsFromJson(item);
    } else {
      overrides.traditional.push_back(CoefficientsFromJson(item));
    }
  };
  try {
    if (json.is_array()) {
      for (const auto &item : json) add(item);
    } else {
      add(json);
    }
  } catch (const Error &e) {
    throw Error(e.code(), config.coeffs_path + ": " + e.what());
  }
  return overrides;
}

CoefficientSet CoefficientsFor(Formula formula, const RunConfig &config,
                               const CoefficientOverrides &overrides) {
  for (const CoefficientSet &c : overrides.traditional) {
    if (c.formula == formula) return c;
  }
  return BuiltinCoefficients(formula, config.variant);
}

// Everything needed to score documents with a set of formulas.
class Scorer {
 public:
  Scorer(const RunConfig &config, std::vector<Formula> formulas,
         std::ostream &err)
      : config_(config),
        formulas_(std::move(formulas)),
        overrides_(LoadOverrides(config)) {
    if (std::find(formulas_.begin(), formulas_.end(), Formula::kNerf) !=
        formulas_.end()) {
      lexicons_ = LoadLexicons(config, err);
    }
    nerf_options_.lookup.lemma_fallback = !config.no_lemma_fallback;
  }

  const std::vector<Formula> &formulas() const { return formulas_; }

  NerfCoefficients nerf_coefficients() const {
    return overrides_.nerf.value_or(DefaultNerfCoefficients());
  }

  NerfFeatures Features(std::string_view text,
                        std::span<const ParseTree> parses) const {
    if (!lexicons_) {
      throw UsageError("NERF features need lexicons");
    }
    return ExtractNerfFeatures(text, lexicons_->aoa, lexicons_->familiarity,
                               parses, nerf_options_);
  }

  struct Result {
    Score score;
    bool approximate_syntax = false;
  };

  Result ScoreText(std::string_view text, Formula formula,
                   std::span<const ParseTree> parses = {}) const {
    if (formula == Formula::kNerf) {
      const NerfFeatures features = Features(text, parses);
      return {NerfScore(features, nerf_coefficients()),
              features.approximate_syntax};
    }
    return {ScoreFormula(ComputeTextStats(text),
                         CoefficientsFor(formula, config_, overrides_)),
            false};
  }

  std::vector<Result> ScoreAll(std::string_view text,
                               std::span<const ParseTree> parses) const {
    std::vector<Result> results;
    std::optional<TextStats> stats;
    for (Formula formula : formulas_) {
      if (formula == Formula::kNerf) {
        results.push_back(ScoreText(text, formula, parses));
        continue;
      }
      if (!stats) stats = ComputeTextStats(text);
      results.push_back(
          {ScoreFormula(*stats, CoefficientsFor(formula, config_, overrides_)),
           false});
    }
    return results;
  }

 private:
  const RunConfig &config_;
  std::vector<Formula> formulas_;
  CoefficientOverrides overrides_;
  std::optional<Lexicons> lexicons_;
  NerfOptions nerf_options_;
};

std::string CsvField(const std::string &s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string PlainValue(const Json &value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_float()) return FormatDecimal(value.get<double>());
  return value.dump();
}

void Emit(const std::vector<Json> &records, OutputFormat format,
          std::ostream &out) {
  switch (format) {
    case OutputFormat::kJson: {
      Json array = Json::array();
      for (const Json &r : records) array.push_back(r);
      out << array.dump(2) << "\n";
      return;
    }
    case OutputFormat::kCsv: {
      if (records.empty()) return;
      bool first = true;
      for (const auto &[key, value] : records.front().items()) {
        out << (first ? "" : ",") << CsvField(key);
        first = false;
      }
      out << "\n";
      for (const Json &r : records) {
        first = true;
        for (const auto &[key, value] : r.items()) {
          out << (first ? "" : ",") << CsvField(PlainValue(value));
          first = false;
        }
        out << "\n";
      }
      return;
    }
    case OutputFormat::kText:
      for (const Json &r : records) {
        bool first = true;
        for (const auto &[key, value] : r.items()) {
          out << (first ? "" : "\t") << key << "=" << PlainValue(value);
          first = false;
        }
        out << "\n";
      }
      return;
  }
}

std::span<const ParseTree> ParsesOf(
    const std::vector<std::vector<ParseTree>> &parses, std::size_t i) {
  if (parses.empty()) return {};
  return parses[i];
}

// Wraps a library error with the id of the document it came from.
template <typename Fn>
auto ForDocument(const Document &doc, Fn &&fn) {
  try {
    return fn();
  } catch (const Error &e) {
    throw Error(e.code(), "document '" + doc.id + "': " + e.what());
  }
}

int RunScore(const RunConfig &config, std::istream &in, std::ostream &out,
             std::ostream &err) {
  const Scorer scorer(config, SelectFormulas(config, "fkgl,fogi,smog,cole,auto"),
                      err);
  const std::vector<Document> docs = LoadDocuments(config, in);
  const auto parses = LoadParses(config, docs.size());
  std::vector<std::vector<Scorer::Result>> results(docs.size());
  ParallelFor(docs.size(), config.jobs, [&](std::size_t i) {
    results[i] = ForDocument(docs[i], [&] {
      return scorer.ScoreAll(docs[i].text, ParsesOf(parses, i));
    });
  });
  std::vector<Json> records;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    for (const Scorer::Result &r : results[i]) {
      Json record;
      record["id"] = docs[i].id;
      record["formula"] = FormulaName(r.score.formula);
      record["variant"] = VariantName(r.score.variant);
      record["score"] = r.score.value;
      record["rounded"] = r.score.rounded;
      record["approximate_syntax"] = r.approximate_syntax;
      records.push_back(std::move(record));
    }
  }
  Emit(records, config.format, out);
  return kExitOk;
}

int RunFeatures(const RunConfig &config, std::istream &in, std::ostream &out,
                std::ostream &err) {
  const Scorer scorer(config, {Formula::kNerf}, err);
  const std::vector<Document> docs = LoadDocuments(config, in);
  const auto parses = LoadParses(config, docs.size());
  std::vector<NerfFeatures> features(docs.size());
  ParallelFor(docs.size(), config.jobs, [&](std::size_t i) {
    features[i] = ForDocument(docs[i], [&] {
      return scorer.Features(docs[i].text, ParsesOf(parses, i));
    });
  });
  std::vector<Json> records;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    Json record;
    record["id"] = docs[i].id;
    const auto json = NerfFeaturesToJson(features[i]);
    for (const auto &[key, value] : json.items()) {
      record[key] = value;
    }
    records.push_back(std::move(record));
  }
  Emit(records, config.format, out);
  return kExitOk;
}

struct Metrics {
  double mae;
  double r2;
  double pearson;
};

Metrics Measure(std::span<const double> predicted,
                std::span<const double> truth) {
  return {MeanAbsoluteError(predicted, truth), R2Score(predicted, truth),
          PearsonR(predicted, truth)};
}

Json MetricsJson(const Metrics &m, std::size_t items) {
  Json json;
  json["items"] = items;
  json["mae"] = m.mae;
  json["r2"] = m.r2;
  json["pearson_r"] = m.pearson;
  return json;
}

int RunCalibrate(const RunConfig &config, std::istream &in, std::ostream &out,
                 std::ostream &err) {
  if (config.corpus_path.empty()) {
    throw UsageError("calibrate: --corpus is required");
  }
  if (!(config.holdout >= 0.0 && config.holdout < 1.0)) {
    throw UsageError("--holdout must be in [0, 1)");
  }
  const Formula formula = SingleFormula(config, "fkgl");
  RunConfig corpus_only = config;
  corpus_only.inputs.clear();
  const std::vector<Document> docs = LoadDocuments(corpus_only, in);
  std::vector<double> grades;
  for (const Document &doc : docs) {
    grades.push_back(ForDocument(doc, [&] {
      return GradeBandToMidpoint(doc.label);
    }));
  }
  const auto held = static_cast<std::size_t>(
      std::ceil(config.holdout * static_cast<double>(docs.size())));
  const std::size_t train = docs.size() - held;
  const auto parses = LoadParses(config, docs.size());

  Json coefficients;
  std::ostringstream summary;
  std::vector<double> predictions(docs.size());
  if (formula == Formula::kNerf) {
    const Scorer scorer(config, {Formula::kNerf}, err);
    std::vector<NerfFeatures> features(docs.size());
    ParallelFor(docs.size(), config.jobs, [&](std::size_t i) {
      features[i] = ForDocument(docs[i], [&] {
        return scorer.Features(docs[i].text, ParsesOf(parses, i));
      });
    });
    const NerfFitResult fit =
        FitNerf(std::span(features).first(train),
                std::span<const double>(grades).first(train));
    coefficients = NerfCoefficientsToJson(fit.coefficients);
    summary << "formula=nerf items=" << train
            << " rss=" << FormatDecimal(fit.residual_sum_squares)
            << " initial_rss="
            << FormatDecimal(fit.initial_residual_sum_squares)
            << " rank_deficient=" << (fit.rank_deficient ? "true" : "false")
            << "\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
      predictions[i] = NerfScore(features[i], fit.coefficients).value;
    }
  } else {
    std::vector<TextStats> stats(docs.size());
    ParallelFor(docs.size(), config.jobs, [&](std::size_t i) {
      stats[i] =
          ForDocument(docs[i], [&] { return ComputeTextStats(docs[i].text); });
    });
    const FormulaFitResult fit =
        FitFormula(std::span<const TextStats>(stats).first(train),
                   std::span<const double>(grades).first(train),
                   BuiltinCoefficients(formula, Variant::kOriginal));
    coefficients = CoefficientsToJson(fit.coefficients);
    summary << "formula=" << FormulaName(formula) << " items=" << train
            << " rss=" << FormatDecimal(fit.residual_sum_squares)
            << " initial_rss="
            << FormatDecimal(fit.initial_residual_sum_squares)
            << " iterations=" << fit.iterations
            << " converged=" << (fit.converged ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
      predictions[i] = RawFormulaValue(stats[i], fit.coefficients);
    }
  }
  if (held > 0) {
    const Metrics m =
        Measure(std::span<const double>(predictions).subspan(train),
                std::span<const double>(grades).subspan(train));
    summary << "holdout items=" << held << " mae=" << FormatDecimal(m.mae)
            << " r2=" << FormatDecimal(m.r2)
            << " pearson_r=" << FormatDecimal(m.pearson) << "\n";
  }
  if (config.output_path.empty()) {
    out << coefficients.dump(2) << "\n";
    err << summary.str();
  } else {
    std::ofstream file(config.output_path);
    if (!file) {
      throw Error(ErrorCode::kFileUnreadable,
                  "cannot write '" + config.output_path + "'");
    }
    file << coefficients.dump(2) << "\n";
    out << summary.str();
  }
  return kExitOk;
}

int RunFeatureTable(const RunConfig &config, std::ostream &out) {
  const FeatureTable table = LoadFeatureTable(config.feature_table_path);
  const auto a = ApproachAScores(table);
  const auto b = ApproachBScores(table);
  std::vector<Json> records;
  for (const std::string &feature : table.features) {
    Json record;
    record["feature"] = feature;
    record["approach_a"] = a.at(feature);
    record["approach_b"] = b.at(feature);
    record["max"] = 10 * table.datasets.size();
    records.push_back(std::move(record));
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const Json &x, const Json &y) {
                     return x["approach_a"].get<int>() >
                            y["approach_a"].get<int>();
                   });
  Emit(records, config.format, out);
  return kExitOk;
}

int RunEvaluate(const RunConfig &config, std::istream &in, std::ostream &out,
                std::ostream &err) {
  if (!config.feature_table_path.empty()) return RunFeatureTable(config, out);
  if (config.corpus_path.empty()) {
    throw UsageError("evaluate: --corpus or --feature-table is required");
  }
  const Scorer scorer(config, SelectFormulas(config, "fkgl,fogi,smog,cole,auto"),
                      err);
  RunConfig corpus_only = config;
  corpus_only.inputs.clear();
  const std::vector<Document> docs = LoadDocuments(corpus_only, in);
  std::vector<double> grades;
  for (const Document &doc : docs) {
    grades.push_back(
        ForDocument(doc, [&] { return GradeBandToMidpoint(doc.label); }));
  }
  const auto parses = LoadParses(config, docs.size());
  std::vector<std::vector<Scorer::Result>> results(docs.size());
  ParallelFor(docs.size(), config.jobs, [&](std::size_t i) {
    results[i] = ForDocument(docs[i], [&] {
      return scorer.ScoreAll(docs[i].text, ParsesOf(parses, i));
    });
  });
  std::vector<Json> records;
  for (std::size_t f = 0; f < scorer.formulas().size(); ++f) {
    std::vector<double> predicted;
    bool approximate = false;
    for (const auto &r : results) {
      predicted.push_back(r[f].score.value);
      approximate = approximate || r[f].approximate_syntax;
    }
    Json record;
    record["formula"] = FormulaName(scorer.formulas()[f]);
    record["variant"] = VariantName(results.front()[f].score.variant);
    const Json metrics = MetricsJson(Measure(predicted, grades), docs.size());
    for (const auto &[key, value] : metrics.items()) {
      record[key] = value;
    }
    record["approximate_syntax"] = approximate;
    records.push_back(std::move(record));
  }
  Emit(records, config.format, out);
  return kExitOk;
}

int RunRank(const RunConfig &config, std::ostream &out, std::ostream &err) {
  if (config.groups_path.empty()) throw UsageError("rank: --groups is required");
  const Formula formula = SingleFormula(config, "fkgl");
  const Scorer scorer(config, {formula}, err);
  const std::vector<PairedGroup> groups = LoadGroups(config.groups_path);
  const TextScorer score_text = [&](std::string_view text) {
    return scorer.ScoreText(text, formula).score.value;
  };
  Json record;
  record["formula"] = FormulaName(formula);
  record["variant"] = formula == Formula::kNerf
                          ? VariantName(scorer.nerf_coefficients().variant)
                          : VariantName(config.variant);
  record["groups"] = groups.size();
  if (config.pairwise) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const PairedGroup &g : groups) {
      if (g.versions.size() != 2) {
        throw Error(ErrorCode::kInvalidGroup,
                    config.groups_path + ": group '" + g.id +
                        "' needs exactly 2 versions for --pairwise");
      }
      pairs.emplace_back(g.versions[0], g.versions[1]);
    }
    record["pairwise_accuracy"] = PairwiseAccuracy(pairs, score_text);
  } else {
    record["rank_accuracy"] = RankAccuracy(groups, score_text);
  }
  Emit({record}, config.format, out);
  return kExitOk;
}

std::vector<double> ParseRates(const std::string &list) {
  std::vector<double> rates;
  std::stringstream stream(list);
  std::string item;
  while (std::getline(stream, item, ',')) {
    double rate = 0.0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), rate);
    if (ec != std::errc() || ptr != item.data() + item.size() ||
        !(rate > 0.0) || !std::isfinite(rate)) {
      throw UsageError("--wpm: '" + item + "' is not a positive rate");
    }
    rates.push_back(rate);
  }
  if (rates.empty()) throw UsageError("--wpm: no rate given");
  return rates;
}

int RunReadTime(const RunConfig &config, std::istream &in, std::ostream &out) {
  const std::vector<double> rates = ParseRates(config.wpm);
  const std::vector<Document> docs = LoadDocuments(config, in);
  std::vector<Json> records;
  for (const Document &doc : docs) {
    const TextStats stats =
        ForDocument(doc, [&] { return ComputeTextStats(doc.text); });
    for (double wpm : rates) {
      Json record;
      record["id"] = doc.id;
      record["words"] = stats.words;
      record["wpm"] = wpm;
      record["minutes"] = ReadTimeMinutes(stats, wpm);
      records.push_back(std::move(record));
    }
  }
  Emit(records, config.format, out);
  return kExitOk;
}

void AddDocumentOptions(CLI::App *cmd, RunConfig &config) {
  cmd->add_option("--input", config.inputs,
                  "Document file, directory of .txt files, or - for stdin");
  cmd->add_option("--corpus", config.corpus_path,
                  "Delimited corpus (id,label,text) or labelled directory");
}

void AddScoringOptions(CLI::App *cmd, RunConfig &config) {
  cmd->add_option("--formula", config.formulas,
                  "nerf,fkgl,fogi,smog,cole,auto or all (comma list)");
  cmd->add_option("--variant", config.variant, "original or adjusted")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Variant>{{"original", Variant::kOriginal},
                                         {"adjusted", Variant::kAdjusted}}));
  cmd->add_option("--coeffs", config.coeffs_path,
                  "Coefficient JSON overriding the built-in sets");
}

void AddNerfOptions(CLI::App *cmd, RunConfig &config) {
  cmd->add_option("--parses", config.parses_path,
                  "Bracketed parses, one tree per line, blank line between "
                  "documents");
  cmd->add_option("--aoa", config.aoa_path, "Age-of-acquisition lexicon");
  cmd->add_option("--familiarity", config.familiarity_path,
                  "Word familiarity lexicon");
  cmd->add_option("--lex-word-col", config.lex_word_col,
                  "Lexicon word column name");
  cmd->add_option("--lex-value-col", config.lex_value_col,
                  "Lexicon value column name");
  cmd->add_flag("--no-lemma-fallback", config.no_lemma_fallback,
                "Look up surface forms only");
}

void AddCommonOptions(CLI::App *cmd, RunConfig &config) {
  cmd->add_option("--format", config.format, "json, csv or text")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{
          {"json", OutputFormat::kJson},
          {"csv", OutputFormat::kCsv},
          {"text", OutputFormat::kText}}));
  cmd->add_option("--jobs", config.jobs,
                  "Worker threads for batch work (0 = all cores)");
}

}  // namespace

int Run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  RunConfig config;
  CLI::App app{"readgauge: readability formulas, calibration and evaluation",
               "readgauge"};
  app.require_subcommand(1, 1);

  auto *score = app.add_subcommand("score", "Score documents");
  AddDocumentOptions(score, config);
  AddScoringOptions(score, config);
  AddNerfOptions(score, config);
  AddCommonOptions(score, config);

  auto *features = app.add_subcommand("features", "Dump NERF feature vectors");
  AddDocumentOptions(features, config);
  AddNerfOptions(features, config);
  AddCommonOptions(features, config);

  auto *calibrate =
      app.add_subcommand("calibrate", "Fit coefficients to a labelled corpus");
  calibrate->add_option("--corpus", config.corpus_path, "Labelled corpus")
      ->required();
  calibrate->add_option("--formula", config.formulas,
                        "Formula to fit (one of nerf,fkgl,fogi,smog,cole,auto)");
  calibrate->add_option("--output", config.output_path,
                        "Write coefficient JSON here instead of stdout");
  calibrate->add_option("--holdout", config.holdout,
                        "Fraction of trailing items held out for evaluation");
  AddNerfOptions(calibrate, config);
  calibrate->add_option("--jobs", config.jobs, "Worker threads");

  auto *evaluate = app.add_subcommand(
      "evaluate", "MAE, r2 and Pearson r against corpus grade labels");
  evaluate->add_option("--corpus", config.corpus_path, "Labelled corpus");
  evaluate->add_option("--feature-table", config.feature_table_path,
                       "Score a feature x dataset correlation table instead");
  AddScoringOptions(evaluate, config);
  AddNerfOptions(evaluate, config);
  AddCommonOptions(evaluate, config);

  auto *rank = app.add_subcommand(
      "rank", "Simplification ranking accuracy over paired groups");
  rank->add_option("--groups", config.groups_path,
                   "JSON array of {id, versions} ordered hard to easy")
      ->required();
  rank->add_flag("--pairwise", config.pairwise,
                 "Two-version groups, report pairwise accuracy");
  AddScoringOptions(rank, config);
  AddNerfOptions(rank, config);
  AddCommonOptions(rank, config);

  auto *readtime = app.add_subcommand("readtime", "Reading time in minutes");
  AddDocumentOptions(readtime, config);
  readtime->add_option("--wpm", config.wpm, "Rates in words per minute");
  AddCommonOptions(readtime, config);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (score->parsed()) return RunScore(config, in, out, err);
    if (features->parsed()) return RunFeatures(config, in, out, err);
    if (calibrate->parsed()) return RunCalibrate(config, in, out, err);
    if (evaluate->parsed()) return RunEvaluate(config, in, out, err);
    if (rank->parsed()) return RunRank(config, out, err);
    if (readtime->parsed()) return RunReadTime(config, in, out);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace readgauge::cli
