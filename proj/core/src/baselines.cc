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

#include "citescope/baselines.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "citescope/context.h"
#include "citescope/errors.h"
#include "citescope/ranking.h"

namespace citescope {
namespace {

std::vector<SparseVector> VectorizeAll(
    std::span<const DocumentSentence> sentences, const Vectorizer& vectorizer) {
  std::vector<SparseVector> vectors;
  vectors.reserve(sentences.size());
  for (const auto& sentence : sentences) {
    vectors.push_back(vectorizer(sentence.tokens));
  }
  return vectors;
}

// Takes sentences in `order`, skipping any that would overflow the budget.
Summary TakeInOrder(std::span<const DocumentSentence> sentences,
                    std::span<const std::size_t> order,
                    std::span<const double> scores, std::size_t budget_words,
                    std::string method) {
  Summary summary;
  summary.method = std::move(method);
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto& sentence = sentences[order[rank]];
    const std::size_t words = CountWords(sentence.text);
    if (summary.word_count + words > budget_words) continue;
    summary.word_count += words;
    summary.sentences.push_back({sentence.id, sentence.text, "", rank,
                                 scores.empty() ? 0.0 : scores[order[rank]]});
  }
  return summary;
}

SparseVector Centroid(std::span<const SparseVector> vectors) {
  std::vector<SparseVector::Entry> entries;
  for (const auto& vector : vectors) {
    entries.insert(entries.end(), vector.entries().begin(),
                   vector.entries().end());
  }
  const SparseVector sum(std::move(entries));
  return sum.Scaled(1.0 / static_cast<double>(vectors.size()));
}

// Centrality order of the items, computed on their own cosine graph.
std::vector<std::pair<std::size_t, double>> RankItems(
    std::span<const SparseVector> vectors,
    std::span<const std::size_t> members) {
  std::vector<SparseVector> subset;
  subset.reserve(members.size());
  for (const std::size_t m : members) subset.push_back(vectors[m]);
  const WeightedGraph graph = BuildSimilarityGraph(subset, 0.0);
  const CentralityScores scores = Centrality(graph);
  std::vector<std::pair<std::size_t, double>> ranked;
  for (const std::size_t i : RankByScore(scores.score)) {
    ranked.emplace_back(members[i], scores.score[i]);
  }
  return ranked;
}

}  // namespace

std::vector<DocumentSentence> DocumentSentences(const Article& article) {
  std::vector<DocumentSentence> out;
  out.reserve(article.sentences.size());
  for (const auto& sentence : article.sentences) {
    out.push_back({article.id + "#" + std::to_string(sentence.index),
                   sentence.text, sentence.tokens});
  }
  return out;
}

DenseMatrix BuildTermDocMatrix(std::span<const DocumentSentence> sentences,
                               const Vectorizer& vectorizer,
                               std::vector<std::string>* terms) {
  const auto vectors = VectorizeAll(sentences, vectorizer);
  std::map<std::string, std::size_t> rows;
  for (const auto& vector : vectors) {
    for (const auto& [term, weight] : vector.entries()) rows.emplace(term, 0);
  }
  std::size_t index = 0;
  for (auto& [term, row] : rows) row = index++;
  DenseMatrix matrix(rows.size(), sentences.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (const auto& [term, weight] : vectors[j].entries()) {
      matrix(rows[term], j) = weight;
    }
  }
  if (terms != nullptr) {
    terms->clear();
    for (const auto& [term, row] : rows) terms->push_back(term);
  }
  return matrix;
}

Summary LsaSummarize(std::span<const DocumentSentence> sentences,
                     const Vectorizer& vectorizer, std::size_t budget_words) {
  Summary summary;
  summary.method = "lsa";
  if (sentences.empty()) return summary;
  const DenseMatrix matrix = BuildTermDocMatrix(sentences, vectorizer);
  if (matrix.rows() == 0) {
    std::vector<std::size_t> order(sentences.size());
    std::iota(order.begin(), order.end(), 0);
    return TakeInOrder(sentences, order, {}, budget_words, "lsa");
  }
  const LsaDecomposition svd = Svd(matrix);

  std::vector<bool> chosen(sentences.size(), false);
  for (std::size_t k = 0; k < svd.singular_values.size(); ++k) {
    if (svd.singular_values[k] <= 0.0) break;
    std::size_t best = sentences.size();
    for (std::size_t j = 0; j < sentences.size(); ++j) {
      if (chosen[j]) continue;
      if (summary.word_count + CountWords(sentences[j].text) > budget_words) {
        continue;
      }
      if (best == sentences.size() ||
          std::abs(svd.vt(k, j)) > std::abs(svd.vt(k, best))) {
        best = j;
      }
    }
    if (best == sentences.size()) break;
    chosen[best] = true;
    summary.word_count += CountWords(sentences[best].text);
    summary.sentences.push_back({sentences[best].id, sentences[best].text,
                                 "sv" + std::to_string(k), k,
                                 std::abs(svd.vt(k, best))});
  }
  return summary;
}

Summary LexRankSummarize(std::span<const DocumentSentence> sentences,
                         const Vectorizer& vectorizer, std::size_t budget_words,
                         double damping) {
  if (sentences.empty()) return Summary{{}, 0, "lexrank"};
  const auto vectors = VectorizeAll(sentences, vectorizer);
  const WeightedGraph graph = BuildSimilarityGraph(vectors, 0.0);
  CentralityOptions options;
  options.damping = damping;
  const CentralityScores scores = Centrality(graph, options);
  const auto order = RankByScore(scores.score);
  return TakeInOrder(sentences, order, scores.score, budget_words, "lexrank");
}

Summary MmrSummarize(std::span<const DocumentSentence> sentences,
                     const Vectorizer& vectorizer, double lambda,
                     std::size_t budget_words) {
  Summary summary;
  summary.method = "mmr";
  if (sentences.empty()) return summary;
  const auto vectors = VectorizeAll(sentences, vectorizer);
  const SparseVector centroid = Centroid(vectors);
  std::vector<double> relevance(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    relevance[i] = Cosine(vectors[i], centroid);
  }

  std::vector<bool> available(sentences.size(), true);
  std::vector<std::size_t> selected;
  while (true) {
    std::size_t best = sentences.size();
    double best_score = 0.0;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (!available[i]) continue;
      if (summary.word_count + CountWords(sentences[i].text) > budget_words) {
        available[i] = false;
        continue;
      }
      double redundancy = 0.0;
      for (const std::size_t j : selected) {
        redundancy = std::max(redundancy, Cosine(vectors[i], vectors[j]));
      }
      const double score = lambda * relevance[i] - (1.0 - lambda) * redundancy;
      if (best == sentences.size() || score > best_score) {
        best = i;
        best_score = score;
      }
    }
    if (best == sentences.size()) break;
    available[best] = false;
    selected.push_back(best);
    summary.word_count += CountWords(sentences[best].text);
    summary.sentences.push_back({sentences[best].id, sentences[best].text, "",
                                 summary.sentences.size(), best_score});
  }
  return summary;
}

std::vector<Partition> AverageLinkLevels(std::span<const SparseVector> items) {
  const std::size_t n = items.size();
  std::vector<Partition> levels;
  if (n == 0) return levels;

  // Sum of pairwise distances between clusters; clusters are indexed by
  // their first member's slot and retired on merge.
  std::vector<std::vector<double>> distance_sum(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = 1.0 - Cosine(items[i], items[j]);
      distance_sum[i][j] = distance_sum[j][i] = d;
    }
  }
  std::vector<std::size_t> size(n, 1);
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  levels.emplace_back(label);

  for (std::size_t merges = 1; merges < n; ++merges) {
    std::size_t best_a = n, best_b = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n; ++a) {
      if (!alive[a]) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!alive[b]) continue;
        const double average =
            distance_sum[a][b] / static_cast<double>(size[a] * size[b]);
        if (average < best) {
          best = average;
          best_a = a;
          best_b = b;
        }
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!alive[c] || c == best_a || c == best_b) continue;
      distance_sum[best_a][c] += distance_sum[best_b][c];
      distance_sum[c][best_a] = distance_sum[best_a][c];
    }
    size[best_a] += size[best_b];
    alive[best_b] = false;
    for (auto& l : label) {
      if (l == best_b) l = best_a;
    }
    levels.emplace_back(label);
  }
  return levels;
}

Partition ModularityCut(std::span<const SparseVector> items) {
  const WeightedGraph graph = BuildSimilarityGraph(items, 0.0);
  if (!(graph.TotalWeightTwice() > 0.0)) {
    return Partition::Singletons(items.size());
  }
  const auto levels = AverageLinkLevels(items);
  std::size_t best = 0;
  double best_q = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double q = Modularity(graph, levels[i]);
    if (q >= best_q) {
      best_q = q;
      best = i;
    }
  }
  return levels[best];
}

Summary CitationSummarize(std::span<const Citation> citations,
                          const Vectorizer& vectorizer,
                          const Lexicons& lexicons, std::size_t budget_words) {
  if (citations.empty()) throw EmptyInput("citation summary needs citations");
  std::vector<SparseVector> vectors;
  vectors.reserve(citations.size());
  for (const auto& citation : citations) {
    std::string text = citation.text;
    if (!citation.marker.empty()) {
      if (const auto pos = text.find(citation.marker);
          pos != std::string::npos) {
        text.erase(pos, citation.marker.size());
      }
    }
    vectors.push_back(vectorizer(
        Tokenize(StripCitationMarkers(text), {&lexicons.stopwords, true})));
  }

  const Partition clusters = ModularityCut(vectors);
  std::vector<SentenceGroup> groups;
  for (const auto& members : clusters.Members()) {
    SentenceGroup group;
    group.id = "cluster" + std::to_string(groups.size());
    for (const auto& [item, score] : RankItems(vectors, members)) {
      group.ranked.push_back(
          {citations[item].id, citations[item].text, vectors[item], score});
    }
    groups.push_back(std::move(group));
  }
  groups = OrderCommunityGroups(std::move(groups));
  SelectionParams params;
  params.budget_words = budget_words;
  Summary summary = SelectIterative(groups, params);
  summary.method = "citation";
  return summary;
}

}  // namespace citescope
