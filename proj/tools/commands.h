// Copyright 2026 The CiteScope Authors.
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

#ifndef CITESCOPE_TOOLS_COMMANDS_H_
#define CITESCOPE_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "citescope/context.h"
#include "citescope/corpus.h"
#include "citescope/grouping.h"
#include "citescope/pipeline.h"
#include "citescope/rouge.h"
#include "citescope/selection.h"
#include "citescope/textproc.h"

namespace citescope::cli {

// Every knob a run can set. Field names double as config-file keys.
struct RunConfig {
  std::filesystem::path corpus;
  std::string method = "context-comm-it";
  std::size_t budget_words = 250;
  std::string strategy = "full_text";
  std::size_t keyword_top_k = 10;
  double lambda = 0.7;
  std::size_t top_m = 3;
  std::size_t window = 3;
  std::size_t k = 2;
  double min_edge = 0.1;
  double d = 0.1;
  double mmr_lambda = 0.3;
  double pivot_slope = 0.2;
  bool reference_only_idf = false;
  std::uint64_t seed = 42;
  std::filesystem::path output;
  std::filesystem::path model;
  // 0 selects the available hardware parallelism.
  std::size_t jobs = 0;
  // Optional lexicon overrides; empty means the built-in lists.
  std::filesystem::path stopwords;
  std::filesystem::path abbreviations;
  std::filesystem::path verbs;
  std::filesystem::path synonyms;
};

// Lexicons and synonyms resolved from a RunConfig.
struct Resources {
  Lexicons lexicons;
  SynonymDictionary synonyms;
};

Resources LoadResources(const RunConfig& config);

// Note: the returned config's strategy may point into `resources`.
PipelineConfig MakePipelineConfig(const RunConfig& config,
                                  const Resources& resources);

// Runs `task(i)` for i in [0, n) on at most `jobs` threads. The first
// exception (lowest index) is rethrown after all workers finish.
void ParallelFor(std::size_t n, std::size_t jobs,
                 const std::function<void(std::size_t)>& task);

std::size_t ResolveJobs(std::size_t jobs);

std::vector<Summary> SummarizeCorpus(std::span<const Topic> topics,
                                     Method method,
                                     const PipelineConfig& config,
                                     const Lexicons& lexicons,
                                     const FacetClassifier* classifier,
                                     std::size_t jobs);

// Writes <dir>/<topic>.txt (one sentence per line) and <dir>/<topic>.json.
void WriteSummaries(std::span<const Topic> topics,
                    std::span<const Summary> summaries,
                    const std::filesystem::path& dir);

struct FacetTrainingResult {
  FacetClassifier classifier;
  double held_out_accuracy = 0.0;
  std::size_t train_examples = 0;
  std::size_t held_out_examples = 0;
};

// Seeded split of the annotated citations, then training on the rest.
FacetTrainingResult TrainFacetModel(std::span<const Topic> topics,
                                    const Lexicons& lexicons,
                                    const PipelineConfig& config,
                                    const FacetTrainOptions& train_options,
                                    const FacetTrainingOptions& data_options,
                                    double holdout_fraction);

// Gold truncation applies to the short budget only.
std::optional<std::size_t> GoldTruncation(std::size_t budget_words);

// Reads <dir>/<topic>.txt for every topic; a missing file yields rows with
// present = false.
std::vector<ScoreRow> EvaluateDirectory(std::span<const Topic> topics,
                                        const std::filesystem::path& dir,
                                        const std::string& method,
                                        std::size_t budget_words,
                                        const WordSet& abbreviations);

// Leave-one-out gold agreement per topic. Topics with fewer than two golds
// yield absent rows.
std::vector<ScoreRow> OracleRows(std::span<const Topic> topics,
                                 std::size_t budget_words,
                                 const WordSet& abbreviations);

struct CompareOptions {
  std::vector<std::size_t> budgets = {100, 250};
  std::size_t jobs = 1;
};

struct ComparisonRow {
  std::string method;
  std::size_t budget = 0;
  RougeMetric metric = RougeMetric::kRouge1;
  // Topics that produced a score.
  std::size_t n = 0;
  MeanStd recall;
  MeanStd precision;
  MeanStd f1;
  // Non-empty when the method failed; the scores are then zero.
  std::string error;
};

// All methods (MMR at every lambda in kMmrLambdas) plus the oracle, at every
// budget. Discourse methods fail cleanly when `classifier` is null.
std::vector<ComparisonRow> Compare(std::span<const Topic> topics,
                                   const PipelineConfig& config,
                                   const Lexicons& lexicons,
                                   const FacetClassifier* classifier,
                                   const CompareOptions& options);

std::string ComparisonToJson(std::span<const ComparisonRow> rows);
std::string ComparisonToCsv(std::span<const ComparisonRow> rows);
std::string ComparisonToText(std::span<const ComparisonRow> rows);

}  // namespace citescope::cli

#endif  // CITESCOPE_TOOLS_COMMANDS_H_
