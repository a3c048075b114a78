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

#ifndef CITESCOPE_CORPUS_H_
#define CITESCOPE_CORPUS_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citescope/textproc.h"

namespace citescope {

// Discourse facets, in the fixed order used for tie-breaking.
enum class Facet {
  kHypothesis,
  kMethod,
  kResults,
  kImplication,
  kDiscussion,
  kDataSetUsed,
};

inline constexpr std::array<Facet, 6> kAllFacets = {
    Facet::kHypothesis,  Facet::kMethod,     Facet::kResults,
    Facet::kImplication, Facet::kDiscussion, Facet::kDataSetUsed};

// "hypothesis", ..., "data_set_used".
std::string_view FacetName(Facet facet);
// Accepts the snake-case names and the hyphenated "data-set-used".
std::optional<Facet> ParseFacet(std::string_view name);

struct Article {
  std::string id;
  std::string title;
  std::string text;
  // Filled by `PrepareArticle`; empty straight after loading.
  std::vector<Sentence> sentences;

  friend bool operator==(const Article&, const Article&) = default;
};

struct Citation {
  std::string id;
  std::string citing_article_id;
  std::string text;
  // Scalar-value offsets into the citing article's text.
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  std::string marker;
  std::optional<Facet> facet;

  friend bool operator==(const Citation&, const Citation&) = default;
};

struct GoldSummary {
  std::string annotator_id;
  std::string text;
  std::size_t word_count = 0;

  friend bool operator==(const GoldSummary&, const GoldSummary&) = default;
};

struct Topic {
  std::string id;
  Article reference_article;
  std::vector<Article> citing_articles;
  std::vector<Citation> citations;
  std::vector<GoldSummary> gold_summaries;

  const Article* FindCitingArticle(std::string_view id) const;

  friend bool operator==(const Topic&, const Topic&) = default;
};

// Gold summaries may run this far past the nominal 250-word limit.
inline constexpr std::size_t kMaxGoldWords = 275;

// Loads a corpus from a manifest file or from a directory holding
// `manifest.json`. Topic file paths are resolved relative to the manifest.
// Throws MalformedCorpus or IoError.
std::vector<Topic> LoadCorpus(const std::filesystem::path& path);

// Parses and validates a single topic document.
Topic ParseTopic(std::string_view json_text, const std::string& source = "");
std::string SerializeTopic(const Topic& topic);

// Writes `<dir>/manifest.json` plus one `<topic id>.json` per topic.
void WriteCorpus(std::span<const Topic> topics,
                 const std::filesystem::path& dir);

// Splits and tokenizes an article in place (stopwords and numeric tokens
// dropped from `Sentence::tokens`).
void PrepareArticle(Article& article, const Lexicons& lexicons);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

struct CorpusStats {
  std::size_t n_topics = 0;
  MeanStd gold_per_topic;
  MeanStd citing_per_topic;
  // Over citing articles: citations each one makes to its reference.
  MeanStd citations_per_citing;
  // Over gold summaries.
  MeanStd summary_len_words;
  // Over reference articles.
  MeanStd article_len_words;
  // Annotated citations only.
  std::map<Facet, std::size_t> facet_counts;
};

// Population mean and standard deviation.
MeanStd ComputeMeanStd(std::span<const double> values);
CorpusStats ComputeCorpusStats(std::span<const Topic> topics);
std::string StatsToJson(const CorpusStats& stats);

}  // namespace citescope

#endif  // CITESCOPE_CORPUS_H_
