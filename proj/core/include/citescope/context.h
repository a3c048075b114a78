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

#ifndef CITESCOPE_CONTEXT_H_
#define CITESCOPE_CONTEXT_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "citescope/corpus.h"
#include "citescope/textproc.h"

namespace citescope {

// term -> synonyms. Keys are lowercase token sequences joined by one space.
class SynonymDictionary {
 public:
  SynonymDictionary() = default;

  // Lines of `term<TAB>syn1|syn2|...`; '#' comments and blank lines skipped.
  static SynonymDictionary Parse(std::string_view contents);
  static SynonymDictionary Load(const std::filesystem::path& path);
  static const SynonymDictionary& Default();

  const std::vector<std::string>* Find(std::string_view term) const;
  std::size_t size() const { return entries_.size(); }
  // Longest key, in tokens.
  std::size_t max_key_tokens() const { return max_key_tokens_; }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
  std::size_t max_key_tokens_ = 0;
};

// Query-vector strategies.
namespace query {
// Every term except stopwords, numbers and citation markers.
struct FullText {};
// The `top_k` distinct terms with the highest idf.
struct KeywordIdf {
  std::size_t top_k = 10;
};
// Tokens of the noun phrases in the citation.
struct NounPhrase {};
// Noun-phrase tokens plus dictionary synonyms of matched phrases/terms.
struct ConceptExpanded {
  const SynonymDictionary* synonyms = nullptr;
};
}  // namespace query

using QueryStrategy = std::variant<query::FullText, query::KeywordIdf,
                                   query::NounPhrase, query::ConceptExpanded>;

// "full_text", "keyword_idf", "noun_phrase", "concept_expanded".
std::string_view StrategyName(const QueryStrategy& strategy);
// Throws InvalidArgument on unknown names.
QueryStrategy ParseStrategy(std::string_view name, std::size_t top_k,
                            const SynonymDictionary* synonyms);

// Removes author-year groups "(Serrano et al., 1997)", bracketed numeric
// groups "[12,13]", parenthesized numeric groups "(66 and 60)" and runs of
// Unicode superscript digits. Everything else is kept byte for byte.
std::string StripCitationMarkers(std::string_view text);

// Maximal runs of content words, lowercased and joined by single spaces.
// Stopwords, verbs, numbers and punctuation delimit phrases.
std::vector<std::string> ExtractNounPhrases(std::string_view text,
                                            const Lexicons& lexicons);

// Throws EmptyQuery when no term survives filtering.
SparseVector BuildCitationQuery(const Citation& citation,
                                const QueryStrategy& strategy,
                                const Vectorizer& vectorizer,
                                const Lexicons& lexicons);

struct ReferenceSpan {
  // First sentence index and length; the span covers [start, start + length).
  std::size_t start = 0;
  std::size_t length = 0;
  double score = 0.0;
  std::string source_citation_id;

  std::size_t end() const { return start + length; }
  std::vector<std::size_t> sentence_indices() const;
  bool Overlaps(const ReferenceSpan& other) const {
    return start < other.end() && other.start < end();
  }

  friend bool operator==(const ReferenceSpan&, const ReferenceSpan&) = default;
};

struct CitationContext {
  std::string citation_id;
  // Non-overlapping, by non-increasing score.
  std::vector<ReferenceSpan> spans;
};

// Ranks every contiguous window of 1..window sentences by cosine similarity
// to `query` (window vectors built from concatenated sentence tokens). Ties
// go to the earlier start, then the shorter span. Spans overlapping a
// higher-ranked pick are dropped; at most `k` spans are returned.
//
// Throws EmptyQuery for a zero query and InvalidArgument when the article
// has no sentences or k/window is zero.
CitationContext RetrieveReferenceSpans(const SparseVector& query,
                                       const Article& reference, std::size_t k,
                                       std::size_t window,
                                       const Vectorizer& vectorizer);

// Concatenated tokens of sentences [start, start + length).
std::vector<std::string> SpanTokens(const Article& article, std::size_t start,
                                    std::size_t length);

}  // namespace citescope

#endif  // CITESCOPE_CONTEXT_H_
