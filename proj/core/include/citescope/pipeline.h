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

#ifndef CITESCOPE_PIPELINE_H_
#define CITESCOPE_PIPELINE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "citescope/context.h"
#include "citescope/corpus.h"
#include "citescope/grouping.h"
#include "citescope/selection.h"
#include "citescope/textproc.h"

namespace citescope {

enum class Method {
  kContextCommIt,
  kContextCommDiv,
  kContextDiscIt,
  kContextDiscDiv,
  kLsa,
  kLexRank,
  kMmr,
  kCitation,
};

inline constexpr std::array<Method, 8> kAllMethods = {
    Method::kContextCommIt, Method::kContextCommDiv,
    Method::kContextDiscIt, Method::kContextDiscDiv,
    Method::kLsa,           Method::kLexRank,
    Method::kMmr,           Method::kCitation};

// "context-comm-it", ..., "citation".
std::string_view MethodName(Method method);
std::optional<Method> ParseMethod(std::string_view name);
bool NeedsClassifier(Method method);

struct PipelineConfig {
  QueryStrategy strategy = query::FullText{};
  // Spans retrieved per citation and maximum span length in sentences.
  std::size_t k = 2;
  std::size_t window = 3;
  double min_edge = 0.1;
  double damping = 0.1;
  double pivot_slope = 0.2;
  // Idf over the reference article only instead of the whole topic.
  bool reference_only_idf = false;
  SelectionParams selection;
  // Lambda used by the MMR baseline.
  double mmr_lambda = 0.3;
  LouvainOptions louvain;
};

// A topic with every article split and tokenized, and the topic vectorizer.
struct PreparedTopic {
  Topic topic;
  Vectorizer vectorizer;
};

// Idf documents are the sentences of the reference article plus, unless
// `reference_only_idf`, the citing articles and citation texts. The pivot
// length is the mean sentence token count.
PreparedTopic PrepareTopic(const Topic& topic, const Lexicons& lexicons,
                           const PipelineConfig& config);

// Contexts for every citation whose query is non-empty.
std::vector<CitationContext> ExtractContexts(const PreparedTopic& prepared,
                                             const PipelineConfig& config,
                                             const Lexicons& lexicons);

// Sentence groups built from citation contexts, ordered for selection.
std::vector<SentenceGroup> CommunityGroups(
    const PreparedTopic& prepared, std::span<const CitationContext> contexts,
    const PipelineConfig& config);
// Facet groups in kAllFacets order (data_set_used included).
std::vector<std::pair<Facet, SentenceGroup>> DiscourseGroups(
    const PreparedTopic& prepared, std::span<const CitationContext> contexts,
    const FacetClassifier& classifier, const PipelineConfig& config);

// Runs one method on a prepared topic. Discourse methods need `classifier`
// (InvalidArgument otherwise).
Summary SummarizeTopic(const PreparedTopic& prepared, Method method,
                       const PipelineConfig& config, const Lexicons& lexicons,
                       const FacetClassifier* classifier = nullptr);

struct FacetTrainingOptions {
  // Also label each citation's retrieved reference spans with its facet.
  bool include_reference_spans = true;
};

// Labeled spans from every facet-annotated citation of `topics`.
std::vector<LabeledSpan> FacetTrainingData(std::span<const Topic> topics,
                                           const Lexicons& lexicons,
                                           const PipelineConfig& config,
                                           const FacetTrainingOptions& options);

// Idf table over the tokens of `data`.
IdfTable TrainingIdf(std::span<const LabeledSpan> data);

// Citation text without its marker, tokenized for queries and features.
std::vector<std::string> CitationTokens(const Citation& citation,
                                        const Lexicons& lexicons);

struct FacetSplit {
  // Copies of the input topics with held-out citations unannotated.
  std::vector<Topic> train_topics;
  // Held-out annotated citations as labeled token lists.
  std::vector<LabeledSpan> held_out;
};

// Seeded split of the annotated citations; `holdout_fraction` of them
// (rounded down, at least one when two or more exist) are held out.
FacetSplit SplitFacetCorpus(std::span<const Topic> topics,
                            double holdout_fraction, std::uint64_t seed,
                            const Lexicons& lexicons);

// Fraction of `data` classified as labeled; 0 for empty data.
double FacetAccuracy(const FacetClassifier& classifier,
                     std::span<const LabeledSpan> data);

}  // namespace citescope

#endif  // CITESCOPE_PIPELINE_H_
