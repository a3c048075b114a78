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

#include "citescope/selection.h"

#include <algorithm>
#include <set>

#include "citescope/errors.h"
#include "json.hpp"

namespace citescope {
namespace {

bool HasSentences(std::span<const SentenceGroup> groups) {
  return std::any_of(groups.begin(), groups.end(),
                     [](const SentenceGroup& g) { return !g.ranked.empty(); });
}

}  // namespace

std::string Summary::ToText() const {
  std::string out;
  for (const auto& sentence : sentences) {
    out += sentence.text;
    out.push_back('\n');
  }
  return out;
}

std::vector<std::string> Summary::Texts() const {
  std::vector<std::string> texts;
  texts.reserve(sentences.size());
  for (const auto& sentence : sentences) texts.push_back(sentence.text);
  return texts;
}

std::string Summary::ProvenanceJson() const {
  nlohmann::ordered_json root;
  root["method"] = method;
  root["word_count"] = word_count;
  root["sentences"] = nlohmann::ordered_json::array();
  for (const auto& sentence : sentences) {
    nlohmann::ordered_json node;
    node["source_id"] = sentence.source_id;
    node["group"] = sentence.group_id;
    node["rank"] = sentence.rank;
    node["score"] = sentence.score;
    node["words"] = CountWords(sentence.text);
    root["sentences"].push_back(std::move(node));
  }
  return root.dump(2) + "\n";
}

std::vector<SentenceGroup> OrderFacetGroups(
    std::span<const std::pair<Facet, SentenceGroup>> groups) {
  std::vector<SentenceGroup> ordered;
  for (const Facet facet : kIterativeFacetOrder) {
    for (const auto& [group_facet, group] : groups) {
      if (group_facet == facet) ordered.push_back(group);
    }
  }
  return ordered;
}

std::vector<SentenceGroup> OrderCommunityGroups(
    std::vector<SentenceGroup> groups) {
  std::stable_sort(groups.begin(), groups.end(),
                   [](const SentenceGroup& a, const SentenceGroup& b) {
                     return a.ranked.size() > b.ranked.size();
                   });
  return groups;
}

Summary SelectIterative(std::span<const SentenceGroup> groups,
                        const SelectionParams& params) {
  if (!HasSentences(groups)) throw EmptyGroups("no sentences to select from");
  Summary summary;
  summary.method = "iterative";
  std::set<std::string> chosen;
  std::size_t max_rank = 0;
  for (const auto& group : groups) {
    max_rank = std::max(max_rank, group.ranked.size());
  }
  for (std::size_t rank = 0; rank < max_rank; ++rank) {
    bool overflowed = false;
    for (const auto& group : groups) {
      if (rank >= group.ranked.size()) continue;
      const CandidateSentence& candidate = group.ranked[rank];
      if (chosen.contains(candidate.source_id)) continue;
      const std::size_t words = CountWords(candidate.text);
      if (summary.word_count + words > params.budget_words) {
        overflowed = true;
        continue;
      }
      chosen.insert(candidate.source_id);
      summary.word_count += words;
      summary.sentences.push_back({candidate.source_id, candidate.text,
                                   group.id, rank, candidate.centrality});
    }
    if (overflowed) break;
  }
  return summary;
}

Summary SelectNovelty(std::span<const SentenceGroup> groups,
                      const SelectionParams& params) {
  if (!HasSentences(groups)) throw EmptyGroups("no sentences to select from");

  struct PoolEntry {
    const CandidateSentence* sentence;
    const SentenceGroup* group;
    std::size_t rank;
    std::size_t words;
    double relevance;
  };
  std::vector<PoolEntry> pool;
  std::set<std::string> seen;
  for (const auto& group : groups) {
    const std::size_t take = std::min(params.top_m, group.ranked.size());
    for (std::size_t rank = 0; rank < take; ++rank) {
      const auto& sentence = group.ranked[rank];
      if (!seen.insert(sentence.source_id).second) continue;
      pool.push_back({&sentence, &group, rank, CountWords(sentence.text), 0.0});
    }
  }
  // Sim1: mean similarity to the other pool sentences.
  for (std::size_t i = 0; i < pool.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j != i)
        sum += Cosine(pool[i].sentence->vector, pool[j].sentence->vector);
    }
    pool[i].relevance =
        pool.size() > 1 ? sum / static_cast<double>(pool.size() - 1) : 0.0;
  }

  Summary summary;
  summary.method = "novelty";
  std::vector<bool> available(pool.size(), true);
  std::vector<const SparseVector*> selected;
  while (true) {
    std::size_t best = pool.size();
    double best_score = 0.0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!available[i]) continue;
      if (summary.word_count + pool[i].words > params.budget_words) {
        available[i] = false;
        continue;
      }
      double redundancy = 0.0;
      for (const SparseVector* chosen : selected) {
        redundancy =
            std::max(redundancy, Cosine(pool[i].sentence->vector, *chosen));
      }
      const double score = params.lambda * pool[i].relevance -
                           (1.0 - params.lambda) * redundancy;
      const bool better =
          best == pool.size() || score > best_score ||
          (score == best_score &&
           pool[i].sentence->centrality > pool[best].sentence->centrality);
      if (better) {
        best = i;
        best_score = score;
      }
    }
    if (best == pool.size()) break;
    available[best] = false;
    selected.push_back(&pool[best].sentence->vector);
    summary.word_count += pool[best].words;
    summary.sentences.push_back(
        {pool[best].sentence->source_id, pool[best].sentence->text,
         pool[best].group->id, pool[best].rank, best_score});
  }
  return summary;
}

Summary TruncateToBudget(std::span<const SummarySentence> sentences,
                         std::size_t budget_words) {
  Summary summary;
  summary.method = "truncate";
  for (const auto& sentence : sentences) {
    const std::size_t words = CountWords(sentence.text);
    if (summary.word_count + words > budget_words) break;
    summary.word_count += words;
    summary.sentences.push_back(sentence);
  }
  return summary;
}

}  // namespace citescope
