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

#ifndef CITESCOPE_SELECTION_H_
#define CITESCOPE_SELECTION_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "citescope/corpus.h"
#include "citescope/textproc.h"

namespace citescope {

struct CandidateSentence {
  std::string source_id;
  std::string text;
  SparseVector vector;
  double centrality = 0.0;
};

// Sentences of one group, most central first.
struct SentenceGroup {
  std::string id;
  std::vector<CandidateSentence> ranked;
};

struct SummarySentence {
  std::string source_id;
  std::string text;
  std::string group_id;
  std::size_t rank = 0;
  double score = 0.0;

  friend bool operator==(const SummarySentence&,
                         const SummarySentence&) = default;
};

struct Summary {
  std::vector<SummarySentence> sentences;
  std::size_t word_count = 0;
  std::string method;

  // One sentence per line, newline-terminated.
  std::string ToText() const;
  // {"method", "word_count", "sentences": [{source_id, group, rank, score,
  // words}]}.
  std::string ProvenanceJson() const;
  std::vector<std::string> Texts() const;
};

struct SelectionParams {
  std::size_t budget_words = 250;
  double lambda = 0.7;
  std::size_t top_m = 3;
};

// Facet order for round-based selection; data_set_used is not part of it.
inline constexpr std::array<Facet, 5> kIterativeFacetOrder = {
    Facet::kHypothesis, Facet::kMethod, Facet::kResults, Facet::kImplication,
    Facet::kDiscussion};

// Groups keyed by facet, rearranged into kIterativeFacetOrder (facets
// without a group are skipped, data_set_used is dropped).
std::vector<SentenceGroup> OrderFacetGroups(
    std::span<const std::pair<Facet, SentenceGroup>> groups);
// Descending group size, ties by the original position.
std::vector<SentenceGroup> OrderCommunityGroups(
    std::vector<SentenceGroup> groups);

// Round r takes the rank-r sentence of each group, in the given group order.
// A sentence that does not fit the remaining budget is skipped and the rest
// of the round is still tried; selection stops after a round that skipped
// anything or when all groups are exhausted. Repeated source ids are
// ignored. Throws EmptyGroups when no group has a sentence.
Summary SelectIterative(std::span<const SentenceGroup> groups,
                        const SelectionParams& params);

// Greedy argmax of lambda * Sim1(S) - (1 - lambda) * Sim2(S) over the pool
// of the top_m sentences of every group. Sim1 is the mean cosine of S to the
// other pool sentences; Sim2 is the max cosine to the sentences already
// chosen (0 while the summary is empty). Candidates that no longer fit are
// dropped. Ties go to higher centrality, then pool order.
// Throws EmptyGroups when no group has a sentence.
Summary SelectNovelty(std::span<const SentenceGroup> groups,
                      const SelectionParams& params);

// Keeps the longest prefix of whole sentences that fits the budget.
Summary TruncateToBudget(std::span<const SummarySentence> sentences,
                         std::size_t budget_words);

}  // namespace citescope

#endif  // CITESCOPE_SELECTION_H_
