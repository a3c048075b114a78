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

#include "citescope/context.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>  // NOLINT
#include <set>
#include <sstream>

#include "citescope/errors.h"

namespace citescope {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view TrimView(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> SplitOn(std::string_view s, char delimiter) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(delimiter, pos);
    parts.emplace_back(s.substr(pos, next == std::string_view::npos
                                         ? std::string_view::npos
                                         : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::string JoinTokens(std::span<const std::string> tokens) {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

const std::regex& AuthorYearPattern() {
  static const std::regex pattern(
      R"(\([^()]*[A-Za-z][^()]*\b(19|20)[0-9]{2}[a-z]?\b[^()]*\))");
  return pattern;
}

const std::regex& BracketNumericPattern() {
  static const std::regex pattern(
      "\\[\\s*[0-9]+(\\s*(-|\xE2\x80\x93|,|;)\\s*[0-9]+)*\\s*\\]");
  return pattern;
}

const std::regex& ParenNumericPattern() {
  static const std::regex pattern(
      "\\(\\s*[0-9]+(\\s*(-|\xE2\x80\x93|,|;|and)\\s*[0-9]+)*\\s*\\)");
  return pattern;
}

const std::regex& SuperscriptPattern() {
  // Superscript digits 0-9 in UTF-8, optionally comma separated.
  static const std::regex pattern(
      "(\xC2\xB9|\xC2\xB2|\xC2\xB3|\xE2\x81[\xB0\xB4-\xB9])+"
      "(,(\xC2\xB9|\xC2\xB2|\xC2\xB3|\xE2\x81[\xB0\xB4-\xB9])+)*");
  return pattern;
}

std::vector<std::string> FilteredTokens(std::string_view text,
                                        const Lexicons& lexicons) {
  return Tokenize(text, {&lexicons.stopwords, /*drop_numeric=*/true});
}

std::vector<std::string> PhraseTokens(std::span<const std::string> phrases) {
  std::vector<std::string> tokens;
  for (const auto& phrase : phrases) {
    for (auto& token : SplitOn(phrase, ' ')) {
      if (!token.empty()) tokens.push_back(std::move(token));
    }
  }
  return tokens;
}

SparseVector RequireTerms(std::span<const std::string> tokens,
                          const Vectorizer& vectorizer,
                          const Citation& citation) {
  SparseVector query = vectorizer(tokens);
  if (query.empty()) {
    throw EmptyQuery("citation '" + citation.id +
                     "' has no query terms after filtering");
  }
  return query;
}

}  // namespace

SynonymDictionary SynonymDictionary::Parse(std::string_view contents) {
  SynonymDictionary dict;
  for (const auto& raw_line : SplitOn(contents, '\n')) {
    const std::string_view line = TrimView(raw_line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) continue;
    const auto key_tokens = Tokenize(line.substr(0, tab));
    if (key_tokens.empty()) continue;
    std::vector<std::string> synonyms;
    for (const auto& syn : SplitOn(line.substr(tab + 1), '|')) {
      const auto syn_tokens = Tokenize(syn);
      if (!syn_tokens.empty()) synonyms.push_back(JoinTokens(syn_tokens));
    }
    auto& slot = dict.entries_[JoinTokens(key_tokens)];
    slot.insert(slot.end(), synonyms.begin(), synonyms.end());
    dict.max_key_tokens_ = std::max(dict.max_key_tokens_, key_tokens.size());
  }
  return dict;
}

SynonymDictionary SynonymDictionary::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open synonym dictionary " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

const std::vector<std::string>* SynonymDictionary::Find(
    std::string_view term) const {
  const auto it = entries_.find(term);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string_view StrategyName(const QueryStrategy& strategy) {
  return std::visit(
      Overloaded{
          [](const query::FullText&) { return "full_text"; },
          [](const query::KeywordIdf&) { return "keyword_idf"; },
          [](const query::NounPhrase&) { return "noun_phrase"; },
          [](const query::ConceptExpanded&) { return "concept_expanded"; }},
      strategy);
}

QueryStrategy ParseStrategy(std::string_view name, std::size_t top_k,
                            const SynonymDictionary* synonyms) {
  if (name == "full_text") return query::FullText{};
  if (name == "keyword_idf") {
    if (top_k == 0) throw InvalidArgument("keyword_idf needs top_k >= 1");
    return query::KeywordIdf{top_k};
  }
  if (name == "noun_phrase") return query::NounPhrase{};
  if (name == "concept_expanded") return query::ConceptExpanded{synonyms};
  throw InvalidArgument("unknown query strategy '" + std::string(name) + "'");
}

std::string StripCitationMarkers(std::string_view text) {
  std::string out(text);
  for (const std::regex* pattern :
       {&AuthorYearPattern(), &BracketNumericPattern(), &ParenNumericPattern(),
        &SuperscriptPattern()}) {
    out = std::regex_replace(out, *pattern, "");
  }
  return out;
}

std::vector<std::string> ExtractNounPhrases(std::string_view text,
                                            const Lexicons& lexicons) {
  std::vector<std::string> phrases;
  std::string phrase;
  auto close_phrase = [&] {
    if (!phrase.empty()) phrases.push_back(std::move(phrase));
    phrase.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isalnum(c) && c < 0x80) {
      std::string word;
      while (i < text.size()) {
        const auto d = static_cast<unsigned char>(text[i]);
        if (!(std::isalnum(d) && d < 0x80)) break;
        word.push_back(static_cast<char>(std::tolower(d)));
        ++i;
      }
      const bool delimiter = lexicons.stopwords.contains(word) ||
                             IsNumericToken(word) ||
                             IsVerb(word, lexicons.verbs);
      if (delimiter) {
        close_phrase();
      } else {
        if (!phrase.empty()) phrase.push_back(' ');
        phrase += word;
      }
      continue;
    }
    // Hyphens and slashes inside a word ("H-ras", "p16/INK4a") keep the
    // phrase open; whitespace does too. Other punctuation ends it.
    const bool joiner = (c == '-' || c == '/') && i > 0 &&
                        i + 1 < text.size() &&
                        std::isalnum(static_cast<unsigned char>(text[i - 1])) &&
                        std::isalnum(static_cast<unsigned char>(text[i + 1]));
    if (!std::isspace(c) && !joiner) close_phrase();
    ++i;
  }
  close_phrase();
  return phrases;
}

SparseVector BuildCitationQuery(const Citation& citation,
                                const QueryStrategy& strategy,
                                const Vectorizer& vectorizer,
                                const Lexicons& lexicons) {
  std::string text = citation.text;
  if (!citation.marker.empty()) {
    for (std::size_t pos = text.find(citation.marker); pos != std::string::npos;
         pos = text.find(citation.marker, pos)) {
      text.erase(pos, citation.marker.size());
    }
  }
  const std::string stripped = StripCitationMarkers(text);

  return std::visit(
      Overloaded{
          [&](const query::FullText&) {
            return RequireTerms(FilteredTokens(stripped, lexicons), vectorizer,
                                citation);
          },
          [&](const query::KeywordIdf& keyword) {
            if (keyword.top_k == 0) {
              throw InvalidArgument("keyword_idf needs top_k >= 1");
            }
            const auto tokens = FilteredTokens(stripped, lexicons);
            std::vector<std::string> terms(tokens.begin(), tokens.end());
            std::sort(terms.begin(), terms.end());
            terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
            std::stable_sort(terms.begin(), terms.end(),
                             [&](const std::string& a, const std::string& b) {
                               return vectorizer.idf.Idf(a) >
                                      vectorizer.idf.Idf(b);
                             });
            if (terms.size() > keyword.top_k) terms.resize(keyword.top_k);
            const std::set<std::string> keep(terms.begin(), terms.end());
            std::vector<std::string> kept;
            for (const auto& token : tokens) {
              if (keep.contains(token)) kept.push_back(token);
            }
            return RequireTerms(kept, vectorizer, citation);
          },
          [&](const query::NounPhrase&) {
            const auto phrases = ExtractNounPhrases(stripped, lexicons);
            return RequireTerms(PhraseTokens(phrases), vectorizer, citation);
          },
          [&](const query::ConceptExpanded& expanded) {
            const SynonymDictionary& dict = expanded.synonyms != nullptr
                                                ? *expanded.synonyms
                                                : SynonymDictionary::Default();
            const auto phrases = ExtractNounPhrases(stripped, lexicons);
            std::vector<std::string> tokens = PhraseTokens(phrases);
            std::vector<std::string> expansions;
            for (const auto& phrase : phrases) {
              const auto words = SplitOn(phrase, ' ');
              // Every sub-sequence of the phrase up to the longest key.
              for (std::size_t begin = 0; begin < words.size(); ++begin) {
                for (std::size_t len = 1; len <= dict.max_key_tokens() &&
                                          begin + len <= words.size();
                     ++len) {
                  const auto* synonyms = dict.Find(
                      JoinTokens(std::span(words).subspan(begin, len)));
                  if (synonyms == nullptr) continue;
                  expansions.insert(expansions.end(), synonyms->begin(),
                                    synonyms->end());
                }
              }
            }
            for (const auto& synonym : expansions) {
              for (auto& token : FilteredTokens(synonym, lexicons)) {
                tokens.push_back(std::move(token));
              }
            }
            return RequireTerms(tokens, vectorizer, citation);
          }},
      strategy);
}

std::vector<std::size_t> ReferenceSpan::sentence_indices() const {
  std::vector<std::size_t> indices(length);
  for (std::size_t i = 0; i < length; ++i) indices[i] = start + i;
  return indices;
}

std::vector<std::string> SpanTokens(const Article& article, std::size_t start,
                                    std::size_t length) {
  std::vector<std::string> tokens;
  for (std::size_t i = start; i < start + length; ++i) {
    const auto& sentence_tokens = article.sentences.at(i).tokens;
    tokens.insert(tokens.end(), sentence_tokens.begin(), sentence_tokens.end());
  }
  return tokens;
}

CitationContext RetrieveReferenceSpans(const SparseVector& query,
                                       const Article& reference, std::size_t k,
                                       std::size_t window,
                                       const Vectorizer& vectorizer) {
  if (query.empty()) throw EmptyQuery("empty citation query");
  if (reference.sentences.empty()) {
    throw InvalidArgument("reference article '" + reference.id +
                          "' has no sentences");
  }
  if (k == 0 || window == 0) {
    throw InvalidArgument("span count and window must be at least 1");
  }

  const std::size_t n = reference.sentences.size();
  std::vector<ReferenceSpan> candidates;
  candidates.reserve(n * window);
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t length = 1; length <= window && start + length <= n;
         ++length) {
      const SparseVector span =
          vectorizer(SpanTokens(reference, start, length));
      candidates.push_back({start, length, Cosine(query, span), {}});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const ReferenceSpan& a, const ReferenceSpan& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.start != b.start) return a.start < b.start;
              return a.length < b.length;
            });

  CitationContext context;
  for (const auto& candidate : candidates) {
    if (context.spans.size() == k) break;
    const bool overlaps = std::any_of(
        context.spans.begin(), context.spans.end(),
        [&](const ReferenceSpan& kept) { return kept.Overlaps(candidate); });
    if (!overlaps) context.spans.push_back(candidate);
  }
  return context;
}

}  // namespace citescope
