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

#ifndef CITESCOPE_BASELINES_H_
#define CITESCOPE_BASELINES_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "citescope/corpus.h"
#include "citescope/grouping.h"
#include "citescope/linalg.h"
#include "citescope/selection.h"
#include "citescope/textproc.h"

namespace citescope {

// A unit the baselines can pick: a document sentence or a citation text.
struct DocumentSentence {
  std::string id;
  std::string text;
  std::vector<std::string> tokens;
};

// Sentences of an article prepared with `PrepareArticle`.
std::vector<DocumentSentence> DocumentSentences(const Article& article);

// terms x sentences matrix of vectorized weights. `terms` receives the row
// labels (sorted) when non-null.
DenseMatrix BuildTermDocMatrix(std::span<const DocumentSentence> sentences,
                               const Vectorizer& vectorizer,
                               std::vector<std::string>* terms = nullptr);

// For each right singular vector in order, the not-yet-chosen sentence with
// the largest |V^T| entry that still fits the budget.
Summary LsaSummarize(std::span<const DocumentSentence> sentences,
                     const Vectorizer& vectorizer, std::size_t budget_words);

inline constexpr double kLexRankDamping = 0.1;

// Sentences by descending centrality on the full cosine graph.
Summary LexRankSummarize(std::span<const DocumentSentence> sentences,
                         const Vectorizer& vectorizer, std::size_t budget_words,
                         double damping = kLexRankDamping);

inline constexpr std::array<double, 3> kMmrLambdas = {0.3, 0.5, 0.7};

// Greedy lambda * cos(S, centroid) - (1 - lambda) * max cos(S, chosen).
Summary MmrSummarize(std::span<const DocumentSentence> sentences,
                     const Vectorizer& vectorizer, double lambda,
                     std::size_t budget_words);

// Average-link agglomerative clustering on cosine distance. Element i of the
// result is the partition after i merges (element 0 is all singletons).
std::vector<Partition> AverageLinkLevels(std::span<const SparseVector> items);

// The dendrogram level whose partition has the highest modularity on the
// cosine graph; ties go to fewer clusters. All singletons if the graph has
// no edges.
Partition ModularityCut(std::span<const SparseVector> items);

// Clusters citation texts (markers stripped for similarity), ranks each
// cluster by centrality and takes sentences round-robin, largest cluster
// first. Throws EmptyInput for no citations.
Summary CitationSummarize(std::span<const Citation> citations,
                          const Vectorizer& vectorizer,
                          const Lexicons& lexicons, std::size_t budget_words);

}  // namespace citescope

#endif  // CITESCOPE_BASELINES_H_
