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

#ifndef CITESCOPE_ROUGE_H_
#define CITESCOPE_ROUGE_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citescope/corpus.h"
#include "citescope/textproc.h"

namespace citescope {

enum class RougeMetric { kRouge1, kRouge2, kRougeL };

inline constexpr std::array<RougeMetric, 3> kAllRougeMetrics = {
    RougeMetric::kRouge1, RougeMetric::kRouge2, RougeMetric::kRougeL};

// "rouge1", "rouge2", "rougeL".
std::string_view RougeMetricName(RougeMetric metric);

struct RougeScore {
  RougeMetric metric = RougeMetric::kRouge1;
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;

  static RougeScore Make(RougeMetric metric, double recall, double precision);
};

// Lowercase alphanumeric tokens, stopwords kept.
std::vector<std::string> RougeTokenize(std::string_view text);

// Counts pooled over all golds: recall is clipped matches over gold n-grams,
// precision is the same matches over |golds| times candidate n-grams.
RougeScore RougeN(std::span<const std::string> candidate,
                  std::span<const std::vector<std::string>> golds,
                  std::size_t n);

// Number of positions of `gold_sentence` covered by the union of its LCS
// with each candidate sentence.
std::size_t LcsUnion(std::span<const std::string> gold_sentence,
                     std::span<const std::vector<std::string>> candidate);

// Summary-level ROUGE-L against one gold given as sentences. Union-LCS hits
// are clipped by candidate token counts so scores stay in [0, 1].
RougeScore RougeLSingle(std::span<const std::vector<std::string>> candidate,
                        std::span<const std::vector<std::string>> gold);

// Macro average of recall and precision over golds; f1 from the averages.
RougeScore RougeL(std::span<const std::vector<std::string>> candidate,
                  std::span<const std::vector<std::vector<std::string>>> golds);

// First `max_words` whitespace-delimited words, single-space joined.
std::string TruncateWords(std::string_view text, std::size_t max_words);

using RougeReport = std::map<RougeMetric, RougeScore>;

// Scores candidate sentences against gold texts. Golds are optionally cut to
// their first `truncate_gold_to` words and split into sentences with
// `abbreviations`.
RougeReport EvaluateSummary(std::span<const std::string> candidate_sentences,
                            std::span<const GoldSummary> golds,
                            std::optional<std::size_t> truncate_gold_to,
                            const WordSet& abbreviations);

// Leave-one-out agreement among human summaries: each gold is scored as a
// candidate against the others and the scores are averaged. nullopt with
// fewer than two golds.
std::optional<RougeReport> OracleScore(
    std::span<const GoldSummary> golds,
    std::optional<std::size_t> truncate_gold_to, const WordSet& abbreviations);

struct ScoreRow {
  std::string topic;
  std::string method;
  RougeMetric metric = RougeMetric::kRouge1;
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
  // False when the summary was missing; scores are then zero.
  bool present = true;
};

// JSON array of {topic, method, metric, recall, precision, f1[, absent]}.
std::string ScoreRowsToJson(std::span<const ScoreRow> rows);
// Header plus one line per row: topic,method,metric,recall,precision,f1.
std::string ScoreRowsToCsv(std::span<const ScoreRow> rows);

}  // namespace citescope

#endif  // CITESCOPE_ROUGE_H_
