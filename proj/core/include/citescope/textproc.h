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

#ifndef CITESCOPE_TEXTPROC_H_
#define CITESCOPE_TEXTPROC_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace citescope {

using WordSet = std::unordered_set<std::string>;

// A sentence produced by `SplitSentences`. Offsets are Unicode scalar-value
// indices into the article text, half-open.
struct Sentence {
  std::string article_id;
  std::size_t index = 0;
  std::string text;
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  std::vector<std::string> tokens;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Word lists that drive splitting, tokenization and phrase chunking.
struct Lexicons {
  WordSet stopwords;
  // Lowercased abbreviations including their trailing period ("fig.").
  WordSet abbreviations;
  // Base-form verbs; see `IsVerb` for inflection handling.
  WordSet verbs;

  // Lexicons compiled into the library from core/data.
  static const Lexicons& Default();
};

// Reads a one-entry-per-line word list. Blank lines and lines starting with
// '#' are skipped; entries are trimmed and lowercased. Throws IoError.
WordSet LoadWordList(const std::filesystem::path& path);
WordSet ParseWordList(std::string_view contents);

// Rule-based sentence boundary detection. A boundary follows '.', '!' or '?'
// (plus any closing quotes/brackets) when followed by whitespace or end of
// text, except when
//  - the word ending in the period is in `abbreviations`,
//  - the next non-space character is lowercase,
//  - the terminator sits inside parentheses or brackets.
// Text without a terminator becomes a single sentence. Returned sentences
// have trimmed text and empty `tokens`/`article_id`.
std::vector<Sentence> SplitSentences(std::string_view text,
                                     const WordSet& abbreviations);

struct TokenizeOptions {
  const WordSet* stopwords = nullptr;
  // Drop tokens made only of digits and [.,%].
  bool drop_numeric = false;
};

// Lowercase ASCII-alphanumeric terms. Any other byte separates tokens.
std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizeOptions& options = {});

// True when `token` is a purely numeric term (^[0-9.,%]+$).
bool IsNumericToken(std::string_view token);

// Lexicon lookup with light inflection stripping (-s, -es, -ed, -d, -ing)
// and the -ize/-ise/-ate/-ify suffix heuristic.
bool IsVerb(std::string_view token, const WordSet& verbs);

// Whitespace-delimited word count.
std::size_t CountWords(std::string_view text);

class IdfTable {
 public:
  IdfTable() = default;

  // `documents` are token lists; a document contributes at most one to each
  // term's document frequency.
  static IdfTable Build(std::span<const std::vector<std::string>> documents);
  // Restores a table from serialized counts.
  static IdfTable FromCounts(std::size_t doc_count,
                             std::map<std::string, std::size_t> df);

  // ln((N + 1) / (df + 1)) + 1. Unseen terms use df = 0.
  double Idf(std::string_view term) const;
  std::size_t DocFrequency(std::string_view term) const;

  std::size_t doc_count() const { return doc_count_; }
  const std::map<std::string, std::size_t, std::less<>>& df() const {
    return df_;
  }
  bool empty() const { return df_.empty(); }

 private:
  std::size_t doc_count_ = 0;
  std::map<std::string, std::size_t, std::less<>> df_;
};

// Non-negative sparse term weights, sorted by term, with a cached L2 norm.
class SparseVector {
 public:
  using Entry = std::pair<std::string, double>;

  SparseVector() = default;
  // Zero and negative weights are dropped; duplicate terms are summed.
  explicit SparseVector(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  double norm() const { return norm_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  double Weight(std::string_view term) const;

  SparseVector Scaled(double factor) const;
  double Dot(const SparseVector& other) const;

 private:
  std::vector<Entry> entries_;
  double norm_ = 0.0;
};

// Length-pivot parameters: denominator (1 - slope) + slope * len / avg.
struct PivotParams {
  double slope = 0.2;
  double avg_doc_len = 1.0;
};

// Sublinear-tf, idf-weighted, pivot-normalized vector:
//   w(t) = (1 + ln(1 + ln tf)) * idf(t) / ((1 - s) + s * len / avg_doc_len)
// Throws InvalidArgument if pivot.avg_doc_len <= 0 or slope outside [0, 1].
SparseVector Vectorize(std::span<const std::string> tokens, const IdfTable& idf,
                       const PivotParams& pivot);

// dot(a, b) / (|a| |b|), clamped to [0, 1]; 0 if either vector is zero.
double Cosine(const SparseVector& a, const SparseVector& b);

// Idf table plus pivot parameters; the pair every similarity computation
// in a topic shares.
struct Vectorizer {
  IdfTable idf;
  PivotParams pivot;

  SparseVector operator()(std::span<const std::string> tokens) const {
    return Vectorize(tokens, idf, pivot);
  }
};

}  // namespace citescope

#endif  // CITESCOPE_TEXTPROC_H_
