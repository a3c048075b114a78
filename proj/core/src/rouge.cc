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

#include "citescope/rouge.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>

#include "json.hpp"

namespace citescope {
namespace {

using NgramCounts = std::map<std::string, std::size_t>;

NgramCounts CountNgrams(std::span<const std::string> tokens, std::size_t n) {
  NgramCounts counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t j = 1; j < n; ++j) {
      key.push_back('\x1f');
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

std::size_t Total(const NgramCounts& counts) {
  std::size_t total = 0;
  for (const auto& [gram, count] : counts) total += count;
  return total;
}

double Ratio(std::size_t numerator, std::size_t denominator) {
  return denominator == 0 ? 0.0
                          : static_cast<double>(numerator) /
                                static_cast<double>(denominator);
}

// Positions of `gold` on one LCS with `candidate`.
void LcsPositions(std::span<const std::string> gold,
                  std::span<const std::string> candidate,
                  std::set<std::size_t>& positions) {
  const std::size_t m = gold.size();
  const std::size_t n = candidate.size();
  if (m == 0 || n == 0) return;
  std::vector<std::size_t> table((m + 1) * (n + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return table[i * (n + 1) + j];
  };
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      at(i, j) = gold[i - 1] == candidate[j - 1]
                     ? at(i - 1, j - 1) + 1
                     : std::max(at(i - 1, j), at(i, j - 1));
    }
  }
  std::size_t i = m, j = n;
  while (i > 0 && j > 0) {
    if (gold[i - 1] == candidate[j - 1]) {
      positions.insert(i - 1);
      --i;
      --j;
    } else if (at(i - 1, j) >= at(i, j - 1)) {
      --i;
    } else {
      --j;
    }
  }
}

}  // namespace

std::string_view RougeMetricName(RougeMetric metric) {
  switch (metric) {
    case RougeMetric::kRouge1:
      return "rouge1";
    case RougeMetric::kRouge2:
      return "rouge2";
    case RougeMetric::kRougeL:
      return "rougeL";
  }
  return "unknown";
}

RougeScore RougeScore::Make(RougeMetric metric, double recall,
                            double precision) {
  RougeScore score{metric, recall, precision, 0.0};
  if (recall + precision > 0.0) {
    score.f1 = 2.0 * recall * precision / (recall + precision);
  }
  return score;
}

std::vector<std::string> RougeTokenize(std::string_view text) {
  return Tokenize(text);
}

RougeScore RougeN(std::span<const std::string> candidate,
                  std::span<const std::vector<std::string>> golds,
                  std::size_t n) {
  const RougeMetric metric =
      n == 1 ? RougeMetric::kRouge1 : RougeMetric::kRouge2;
  const NgramCounts candidate_counts = CountNgrams(candidate, n);
  const std::size_t candidate_total = Total(candidate_counts);
  std::size_t matches = 0;
  std::size_t gold_total = 0;
  for (const auto& gold : golds) {
    const NgramCounts gold_counts = CountNgrams(gold, n);
    gold_total += Total(gold_counts);
    for (const auto& [gram, count] : gold_counts) {
      const auto it = candidate_counts.find(gram);
      if (it != candidate_counts.end()) matches += std::min(count, it->second);
    }
  }
  return RougeScore::Make(metric, Ratio(matches, gold_total),
                          Ratio(matches, golds.size() * candidate_total));
}

std::size_t LcsUnion(std::span<const std::string> gold_sentence,
                     std::span<const std::vector<std::string>> candidate) {
  std::set<std::size_t> positions;
  for (const auto& sentence : candidate) {
    LcsPositions(gold_sentence, sentence, positions);
  }
  return positions.size();
}

RougeScore RougeLSingle(std::span<const std::vector<std::string>> candidate,
                        std::span<const std::vector<std::string>> gold) {
  std::map<std::string_view, std::size_t> remaining;
  std::size_t candidate_len = 0;
  for (const auto& sentence : candidate) {
    candidate_len += sentence.size();
    for (const auto& token : sentence) ++remaining[token];
  }
  std::size_t gold_len = 0;
  std::size_t hits = 0;
  for (const auto& reference : gold) {
    gold_len += reference.size();
    std::set<std::size_t> positions;
    for (const auto& sentence : candidate) {
      LcsPositions(reference, sentence, positions);
    }
    for (const std::size_t p : positions) {
      auto it = remaining.find(reference[p]);
      if (it != remaining.end() && it->second > 0) {
        --it->second;
        ++hits;
      }
    }
  }
  return RougeScore::Make(RougeMetric::kRougeL, Ratio(hits, gold_len),
                          Ratio(hits, candidate_len));
}

RougeScore RougeL(
    std::span<const std::vector<std::string>> candidate,
    std::span<const std::vector<std::vector<std::string>>> golds) {
  if (golds.empty()) return RougeScore::Make(RougeMetric::kRougeL, 0.0, 0.0);
  double recall = 0.0;
  double precision = 0.0;
  for (const auto& gold : golds) {
    const RougeScore single = RougeLSingle(candidate, gold);
    recall += single.recall;
    precision += single.precision;
  }
  const double count = static_cast<double>(golds.size());
  return RougeScore::Make(RougeMetric::kRougeL, recall / count,
                          precision / count);
}

std::string TruncateWords(std::string_view text, std::size_t max_words) {
  std::string out;
  std::size_t words = 0;
  std::size_t i = 0;
  while (i < text.size() && words < max_words) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    const std::size_t begin = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i == begin) break;
    if (!out.empty()) out.push_back(' ');
    out.append(text.substr(begin, i - begin));
    ++words;
  }
  return out;
}

RougeReport EvaluateSummary(std::span<const std::string> candidate_sentences,
                            std::span<const GoldSummary> golds,
                            std::optional<std::size_t> truncate_gold_to,
                            const WordSet& abbreviations) {
  std::vector<std::vector<std::string>> candidate;
  std::vector<std::string> candidate_flat;
  for (const auto& sentence : candidate_sentences) {
    candidate.push_back(RougeTokenize(sentence));
    candidate_flat.insert(candidate_flat.end(), candidate.back().begin(),
                          candidate.back().end());
  }
  std::vector<std::vector<std::string>> gold_flat;
  std::vector<std::vector<std::vector<std::string>>> gold_sentences;
  for (const auto& gold : golds) {
    const std::string text = truncate_gold_to
                                 ? TruncateWords(gold.text, *truncate_gold_to)
                                 : gold.text;
    auto& sentences = gold_sentences.emplace_back();
    auto& flat = gold_flat.emplace_back();
    for (const auto& sentence : SplitSentences(text, abbreviations)) {
      sentences.push_back(RougeTokenize(sentence.text));
      flat.insert(flat.end(), sentences.back().begin(), sentences.back().end());
    }
  }
  RougeReport report;
  report[RougeMetric::kRouge1] = RougeN(candidate_flat, gold_flat, 1);
  report[RougeMetric::kRouge2] = RougeN(candidate_flat, gold_flat, 2);
  report[RougeMetric::kRougeL] = RougeL(candidate, gold_sentences);
  return report;
}

std::optional<RougeReport> OracleScore(
    std::span<const GoldSummary> golds,
    std::optional<std::size_t> truncate_gold_to, const WordSet& abbreviations) {
  if (golds.size() < 2) return std::nullopt;
  std::map<RougeMetric, std::array<double, 2>> sums;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const std::string text =
        truncate_gold_to ? TruncateWords(golds[i].text, *truncate_gold_to)
                         : golds[i].text;
    std::vector<std::string> candidate;
    for (const auto& sentence : SplitSentences(text, abbreviations)) {
      candidate.push_back(sentence.text);
    }
    std::vector<GoldSummary> others;
    for (std::size_t j = 0; j < golds.size(); ++j) {
      if (j != i) others.push_back(golds[j]);
    }
    for (const auto& [metric, score] :
         EvaluateSummary(candidate, others, truncate_gold_to, abbreviations)) {
      sums[metric][0] += score.recall;
      sums[metric][1] += score.precision;
    }
  }
  RougeReport report;
  const double n = static_cast<double>(golds.size());
  for (const auto& [metric, sum] : sums) {
    report[metric] = RougeScore::Make(metric, sum[0] / n, sum[1] / n);
  }
  return report;
}

std::string ScoreRowsToJson(std::span<const ScoreRow> rows) {
  nlohmann::ordered_json root = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json node;
    node["topic"] = row.topic;
    node["method"] = row.method;
    node["metric"] = std::string(RougeMetricName(row.metric));
    node["recall"] = row.recall;
    node["precision"] = row.precision;
    node["f1"] = row.f1;
    if (!row.present) node["absent"] = true;
    root.push_back(std::move(node));
  }
  return root.dump(2) + "\n";
}

std::string ScoreRowsToCsv(std::span<const ScoreRow> rows) {
  std::string out = "topic,method,metric,recall,precision,f1\n";
  char buffer[96];
  for (const auto& row : rows) {
    std::snprintf(buffer, sizeof(buffer), ",%.6f,%.6f,%.6f\n", row.recall,
                  row.precision, row.f1);
    out += row.topic + "," + row.method + "," +
           std::string(RougeMetricName(row.metric)) + buffer;
  }
  return out;
}

}  // namespace citescope
