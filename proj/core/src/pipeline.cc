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

#include "citescope/pipeline.h"

#include <algorithm>
#include <random>
#include <set>

#include "citescope/baselines.h"
#include "citescope/errors.h"
#include "citescope/ranking.h"

namespace citescope {
namespace {

constexpr std::array<std::string_view, 8> kMethodNames = {"context-comm-it",
                                                          "context-comm-div",
                                                          "context-disc-it",
                                                          "context-disc-div",
                                                          "lsa",
                                                          "lexrank",
                                                          "mmr",
                                                          "citation"};

std::string SentenceId(const Article& article, std::size_t index) {
  return article.id + "#" + std::to_string(index);
}

// Sentences of the reference article ranked by centrality on their own
// cosine graph.
SentenceGroup RankedGroup(const PreparedTopic& prepared,
                          std::span<const std::size_t> sentence_indices,
                          std::string id, const PipelineConfig& config) {
  const Article& reference = prepared.topic.reference_article;
  std::vector<SparseVector> vectors;
  vectors.reserve(sentence_indices.size());
  for (const std::size_t s : sentence_indices) {
    vectors.push_back(prepared.vectorizer(reference.sentences[s].tokens));
  }
  CentralityOptions options;
  options.damping = config.damping;
  const CentralityScores scores =
      Centrality(BuildSimilarityGraph(vectors, 0.0), options);

  SentenceGroup group;
  group.id = std::move(id);
  for (const std::size_t i : RankByScore(scores.score)) {
    const std::size_t s = sentence_indices[i];
    group.ranked.push_back({SentenceId(reference, s),
                            reference.sentences[s].text, vectors[i],
                            scores.score[i]});
  }
  return group;
}

}  // namespace

std::string_view MethodName(Method method) {
  return kMethodNames[static_cast<std::size_t>(method)];
}

std::optional<Method> ParseMethod(std::string_view name) {
  for (std::size_t i = 0; i < kMethodNames.size(); ++i) {
    if (kMethodNames[i] == name) return kAllMethods[i];
  }
  return std::nullopt;
}

bool NeedsClassifier(Method method) {
  return method == Method::kContextDiscIt || method == Method::kContextDiscDiv;
}

PreparedTopic PrepareTopic(const Topic& topic, const Lexicons& lexicons,
                           const PipelineConfig& config) {
  PreparedTopic prepared{topic, {}};
  PrepareArticle(prepared.topic.reference_article, lexicons);
  for (auto& article : prepared.topic.citing_articles) {
    PrepareArticle(article, lexicons);
  }

  std::vector<std::vector<std::string>> documents;
  for (const auto& sentence : prepared.topic.reference_article.sentences) {
    documents.push_back(sentence.tokens);
  }
  if (!config.reference_only_idf) {
    for (const auto& article : prepared.topic.citing_articles) {
      for (const auto& sentence : article.sentences) {
        documents.push_back(sentence.tokens);
      }
    }
    for (const auto& citation : prepared.topic.citations) {
      documents.push_back(CitationTokens(citation, lexicons));
    }
  }
  std::size_t total = 0;
  std::size_t counted = 0;
  for (const auto& doc : documents) {
    if (doc.empty()) continue;
    total += doc.size();
    ++counted;
  }
  prepared.vectorizer.idf = IdfTable::Build(documents);
  prepared.vectorizer.pivot.slope = config.pivot_slope;
  prepared.vectorizer.pivot.avg_doc_len =
      counted == 0 ? 1.0
                   : static_cast<double>(total) / static_cast<double>(counted);
  return prepared;
}

std::vector<CitationContext> ExtractContexts(const PreparedTopic& prepared,
                                             const PipelineConfig& config,
                                             const Lexicons& lexicons) {
  std::vector<CitationContext> contexts;
  const Article& reference = prepared.topic.reference_article;
  if (reference.sentences.empty()) return contexts;
  for (const auto& citation : prepared.topic.citations) {
    SparseVector query;
    try {
      query = BuildCitationQuery(citation, config.strategy, prepared.vectorizer,
                                 lexicons);
    } catch (const EmptyQuery&) {
      continue;
    }
    CitationContext context = RetrieveReferenceSpans(
        query, reference, config.k, config.window, prepared.vectorizer);
    context.citation_id = citation.id;
    // A span sharing no term with the citation is not context.
    std::erase_if(context.spans,
                  [](const ReferenceSpan& span) { return span.score <= 0.0; });
    for (auto& span : context.spans) span.source_citation_id = citation.id;
    contexts.push_back(std::move(context));
  }
  return contexts;
}

std::vector<SentenceGroup> CommunityGroups(
    const PreparedTopic& prepared, std::span<const CitationContext> contexts,
    const PipelineConfig& config) {
  std::set<std::size_t> unique;
  for (const auto& context : contexts) {
    for (const auto& span : context.spans) {
      for (const std::size_t s : span.sentence_indices()) unique.insert(s);
    }
  }
  const std::vector<std::size_t> sentences(unique.begin(), unique.end());
  std::vector<SparseVector> vectors;
  for (const std::size_t s : sentences) {
    vectors.push_back(prepared.vectorizer(
        prepared.topic.reference_article.sentences[s].tokens));
  }
  std::vector<SentenceGroup> groups;
  for (const auto& [id, members] :
       GroupByCommunity(vectors, config.min_edge, config.louvain)) {
    std::vector<std::size_t> indices;
    for (const std::size_t m : members) indices.push_back(sentences[m]);
    groups.push_back(RankedGroup(prepared, indices,
                                 "community" + std::to_string(id), config));
  }
  return OrderCommunityGroups(std::move(groups));
}

std::vector<std::pair<Facet, SentenceGroup>> DiscourseGroups(
    const PreparedTopic& prepared, std::span<const CitationContext> contexts,
    const FacetClassifier& classifier, const PipelineConfig& config) {
  const Article& reference = prepared.topic.reference_article;
  std::set<std::pair<std::size_t, std::size_t>> spans;
  for (const auto& context : contexts) {
    for (const auto& span : context.spans)
      spans.emplace(span.start, span.length);
  }
  std::vector<std::set<std::size_t>> by_facet(kAllFacets.size());
  for (const auto& [start, length] : spans) {
    const Facet facet =
        classifier.Classify(SpanTokens(reference, start, length));
    for (std::size_t s = start; s < start + length; ++s) {
      by_facet[static_cast<std::size_t>(facet)].insert(s);
    }
  }
  std::vector<std::pair<Facet, SentenceGroup>> groups;
  for (const Facet facet : kAllFacets) {
    const auto& members = by_facet[static_cast<std::size_t>(facet)];
    if (members.empty()) continue;
    const std::vector<std::size_t> indices(members.begin(), members.end());
    groups.emplace_back(
        facet,
        RankedGroup(prepared, indices, std::string(FacetName(facet)), config));
  }
  return groups;
}

Summary SummarizeTopic(const PreparedTopic& prepared, Method method,
                       const PipelineConfig& config, const Lexicons& lexicons,
                       const FacetClassifier* classifier) {
  const std::size_t budget = config.selection.budget_words;
  const Article& reference = prepared.topic.reference_article;
  Summary summary;
  switch (method) {
    case Method::kContextCommIt:
    case Method::kContextCommDiv: {
      const auto contexts = ExtractContexts(prepared, config, lexicons);
      const auto groups = CommunityGroups(prepared, contexts, config);
      summary = method == Method::kContextCommIt
                    ? SelectIterative(groups, config.selection)
                    : SelectNovelty(groups, config.selection);
      break;
    }
    case Method::kContextDiscIt:
    case Method::kContextDiscDiv: {
      if (classifier == nullptr) {
        throw InvalidArgument(std::string(MethodName(method)) +
                              " needs a trained facet model");
      }
      const auto contexts = ExtractContexts(prepared, config, lexicons);
      const auto groups =
          DiscourseGroups(prepared, contexts, *classifier, config);
      if (method == Method::kContextDiscIt) {
        summary = SelectIterative(OrderFacetGroups(groups), config.selection);
      } else {
        std::vector<SentenceGroup> all;
        for (const auto& [facet, group] : groups) all.push_back(group);
        summary = SelectNovelty(all, config.selection);
      }
      break;
    }
    case Method::kLsa:
      summary = LsaSummarize(DocumentSentences(reference), prepared.vectorizer,
                             budget);
      break;
    case Method::kLexRank:
      summary = LexRankSummarize(DocumentSentences(reference),
                                 prepared.vectorizer, budget, config.damping);
      break;
    case Method::kMmr:
      summary = MmrSummarize(DocumentSentences(reference), prepared.vectorizer,
                             config.mmr_lambda, budget);
      break;
    case Method::kCitation:
      summary = CitationSummarize(prepared.topic.citations, prepared.vectorizer,
                                  lexicons, budget);
      break;
  }
  summary.method = std::string(MethodName(method));
  return summary;
}

std::vector<LabeledSpan> FacetTrainingData(
    std::span<const Topic> topics, const Lexicons& lexicons,
    const PipelineConfig& config, const FacetTrainingOptions& options) {
  std::vector<LabeledSpan> data;
  for (const auto& topic : topics) {
    const bool annotated =
        std::any_of(topic.citations.begin(), topic.citations.end(),
                    [](const Citation& c) { return c.facet.has_value(); });
    if (!annotated) continue;
    const PreparedTopic prepared = PrepareTopic(topic, lexicons, config);
    const Article& reference = prepared.topic.reference_article;
    for (const auto& citation : prepared.topic.citations) {
      if (!citation.facet) continue;
      auto tokens = CitationTokens(citation, lexicons);
      if (!tokens.empty()) data.push_back({std::move(tokens), *citation.facet});
      if (!options.include_reference_spans || reference.sentences.empty()) {
        continue;
      }
      try {
        const SparseVector query = BuildCitationQuery(
            citation, config.strategy, prepared.vectorizer, lexicons);
        const CitationContext context = RetrieveReferenceSpans(
            query, reference, config.k, config.window, prepared.vectorizer);
        for (const auto& span : context.spans) {
          auto span_tokens = SpanTokens(reference, span.start, span.length);
          if (!span_tokens.empty()) {
            data.push_back({std::move(span_tokens), *citation.facet});
          }
        }
      } catch (const EmptyQuery&) {
      }
    }
  }
  return data;
}

IdfTable TrainingIdf(std::span<const LabeledSpan> data) {
  std::vector<std::vector<std::string>> documents;
  documents.reserve(data.size());
  for (const auto& span : data) documents.push_back(span.tokens);
  return IdfTable::Build(documents);
}

std::vector<std::string> CitationTokens(const Citation& citation,
                                        const Lexicons& lexicons) {
  std::string text = citation.text;
  if (!citation.marker.empty()) {
    if (const auto pos = text.find(citation.marker); pos != std::string::npos) {
      text.erase(pos, citation.marker.size());
    }
  }
  return Tokenize(StripCitationMarkers(text), {&lexicons.stopwords, true});
}

FacetSplit SplitFacetCorpus(std::span<const Topic> topics,
                            double holdout_fraction, std::uint64_t seed,
                            const Lexicons& lexicons) {
  if (holdout_fraction < 0.0 || holdout_fraction >= 1.0) {
    throw InvalidArgument("holdout fraction must lie in [0, 1)");
  }
  std::vector<std::pair<std::size_t, std::size_t>> annotated;
  for (std::size_t t = 0; t < topics.size(); ++t) {
    for (std::size_t c = 0; c < topics[t].citations.size(); ++c) {
      if (topics[t].citations[c].facet) annotated.emplace_back(t, c);
    }
  }
  // Fisher-Yates with an explicit draw so the split is the same everywhere.
  std::mt19937_64 rng(seed);
  for (std::size_t i = annotated.size(); i > 1; --i) {
    std::swap(annotated[i - 1], annotated[rng() % i]);
  }
  auto n_held = static_cast<std::size_t>(holdout_fraction *
                                         static_cast<double>(annotated.size()));
  if (n_held == 0 && holdout_fraction > 0.0 && annotated.size() >= 2) {
    n_held = 1;
  }
  FacetSplit split;
  split.train_topics.assign(topics.begin(), topics.end());
  std::sort(annotated.begin(), annotated.begin() + n_held);
  for (std::size_t i = 0; i < n_held; ++i) {
    const auto [t, c] = annotated[i];
    Citation& citation = split.train_topics[t].citations[c];
    split.held_out.push_back(
        {CitationTokens(citation, lexicons), *citation.facet});
    citation.facet.reset();
  }
  return split;
}

double FacetAccuracy(const FacetClassifier& classifier,
                     std::span<const LabeledSpan> data) {
  if (data.empty()) return 0.0;
  std::size_t correct = 0;
  for (const auto& span : data) {
    if (classifier.Classify(span.tokens) == span.facet) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

}  // namespace citescope
