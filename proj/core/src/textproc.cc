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

#include "citescope/textproc.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "citescope/errors.h"
#include "citescope/utf8.h"

namespace citescope {
namespace {

bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool IsAsciiAlnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 &&
         static_cast<unsigned char>(c) < 0x80;
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

bool IsClosing(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Whether the period at `dot` closes an abbreviation from the lexicon.
bool EndsAbbreviation(std::string_view text, std::size_t dot,
                      const WordSet& abbreviations) {
  std::size_t begin = dot;
  while (begin > 0 && !IsSpace(text[begin - 1])) --begin;
  std::string_view word = text.substr(begin, dot + 1 - begin);
  while (!word.empty() && (word.front() == '(' || word.front() == '[' ||
                           word.front() == '"' || word.front() == '\'')) {
    word.remove_prefix(1);
  }
  if (abbreviations.contains(ToLower(word))) return true;
  // Multi-word entries such as "et al.".
  for (const auto& abbrev : abbreviations) {
    if (abbrev.find(' ') == std::string::npos) continue;
    if (abbrev.size() > dot + 1) continue;
    const std::size_t start = dot + 1 - abbrev.size();
    if (start > 0 && !IsSpace(text[start - 1]) && text[start - 1] != '(') {
      continue;
    }
    if (ToLower(text.substr(start, abbrev.size())) == abbrev) return true;
  }
  return false;
}

}  // namespace

WordSet ParseWordList(std::string_view contents) {
  WordSet words;
  std::size_t pos = 0;
  while (pos <= contents.size()) {
    std::size_t eol = contents.find('\n', pos);
    if (eol == std::string_view::npos) eol = contents.size();
    const std::string_view line = Trim(contents.substr(pos, eol - pos));
    if (!line.empty() && line.front() != '#') words.insert(ToLower(line));
    pos = eol + 1;
  }
  return words;
}

WordSet LoadWordList(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open word list " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseWordList(buffer.str());
}

std::vector<Sentence> SplitSentences(std::string_view text,
                                     const WordSet& abbreviations) {
  std::vector<std::pair<std::size_t, std::size_t>> byte_spans;
  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && IsSpace(text[begin])) ++begin;
    while (end > begin && IsSpace(text[end - 1])) --end;
    if (begin < end) byte_spans.emplace_back(begin, end);
  };

  std::size_t start = 0;
  int depth = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(' || c == '[') {
      ++depth;
    } else if ((c == ')' || c == ']') && depth > 0) {
      --depth;
    } else if (c == '\n') {
      std::size_t k = i + 1;
      while (k < text.size() && text[k] != '\n' && IsSpace(text[k])) ++k;
      if (k < text.size() && text[k] == '\n') {
        // Blank line: paragraph break.
        emit(start, i);
        depth = 0;
        start = k;
        i = k;
        continue;
      }
    } else if ((c == '.' || c == '!' || c == '?') && depth == 0) {
      std::size_t j = i + 1;
      while (j < text.size() && (text[j] == '.' || text[j] == '!' ||
                                 text[j] == '?' || IsClosing(text[j]))) {
        ++j;
      }
      if (j == text.size() || IsSpace(text[j])) {
        std::size_t next = j;
        while (next < text.size() && IsSpace(text[next])) ++next;
        const bool lowercase_next =
            next < text.size() &&
            std::islower(static_cast<unsigned char>(text[next])) != 0;
        const bool abbreviation =
            c == '.' && j == i + 1 && EndsAbbreviation(text, i, abbreviations);
        if (!lowercase_next && !abbreviation) {
          emit(start, j);
          start = next;
          i = next;
          continue;
        }
      }
      i = j;
      continue;
    }
    ++i;
  }
  emit(start, text.size());

  const auto bounds = utf8::ScalarBoundaries(text);
  auto to_scalar = [&](std::size_t byte) {
    return static_cast<std::size_t>(
        std::lower_bound(bounds.begin(), bounds.end(), byte) - bounds.begin());
  };
  std::vector<Sentence> sentences;
  sentences.reserve(byte_spans.size());
  for (const auto& [begin, end] : byte_spans) {
    Sentence s;
    s.index = sentences.size();
    s.text = std::string(text.substr(begin, end - begin));
    s.char_start = to_scalar(begin);
    s.char_end = to_scalar(end);
    sentences.push_back(std::move(s));
  }
  return sentences;
}

bool IsNumericToken(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= '0' && c <= '9') || c == '.' || c == ',' || c == '%';
  });
}

std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizeOptions& options) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    const bool drop =
        (options.drop_numeric && IsNumericToken(current)) ||
        (options.stopwords != nullptr && options.stopwords->contains(current));
    if (!drop) tokens.push_back(current);
    current.clear();
  };
  for (const char c : text) {
    if (IsAsciiAlnum(c)) {
      current.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

bool IsVerb(std::string_view token, const WordSet& verbs) {
  if (token.empty()) return false;
  auto known = [&](std::string_view base) {
    return base.size() >= 2 && verbs.contains(std::string(base));
  };
  if (known(token)) return true;

  auto strip = [&](std::string_view suffix) -> std::string_view {
    return token.substr(0, token.size() - suffix.size());
  };
  for (std::string_view suffix : {"ing", "ed"}) {
    if (!EndsWith(token, suffix)) continue;
    const std::string_view base = strip(suffix);
    if (known(base) || known(std::string(base) + "e")) return true;
    // Doubled final consonant: "mapping", "stopped".
    if (base.size() >= 3 && base[base.size() - 1] == base[base.size() - 2] &&
        known(base.substr(0, base.size() - 1))) {
      return true;
    }
  }
  if (EndsWith(token, "ied") || EndsWith(token, "ies")) {
    if (known(std::string(token.substr(0, token.size() - 3)) + "y")) {
      return true;
    }
  }
  if (EndsWith(token, "es") && known(strip("es"))) return true;
  if (EndsWith(token, "s") && known(strip("s"))) return true;
  if (EndsWith(token, "d") && known(strip("d"))) return true;

  // Suffix heuristic. Bare "-ate" is left out: in biomedical text it is
  // mostly nouns (phosphate, lysate, substrate).
  if (token.size() >= 6) {
    for (std::string_view suffix :
         {"ize", "izes", "ized", "izing", "ise", "ises", "ised", "ising", "ify",
          "ifies", "ified", "ifying", "ated", "ating"}) {
      if (EndsWith(token, suffix)) return true;
    }
  }
  return false;
}

std::size_t CountWords(std::string_view text) {
  std::size_t count = 0;
  bool in_word = false;
  for (const char c : text) {
    if (IsSpace(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++count;
    }
  }
  return count;
}

IdfTable IdfTable::Build(std::span<const std::vector<std::string>> documents) {
  IdfTable table;
  table.doc_count_ = documents.size();
  for (const auto& doc : documents) {
    std::set<std::string_view> seen(doc.begin(), doc.end());
    for (const auto term : seen) {
      auto it = table.df_.find(term);
      if (it == table.df_.end()) {
        table.df_.emplace(std::string(term), 1);
      } else {
        ++it->second;
      }
    }
  }
  return table;
}

IdfTable IdfTable::FromCounts(std::size_t doc_count,
                              std::map<std::string, std::size_t> df) {
  IdfTable table;
  table.doc_count_ = doc_count;
  for (auto& [term, count] : df) {
    if (count > doc_count) {
      throw InvalidArgument("document frequency of '" + term +
                            "' exceeds document count");
    }
    table.df_.emplace(term, count);
  }
  return table;
}

std::size_t IdfTable::DocFrequency(std::string_view term) const {
  const auto it = df_.find(term);
  return it == df_.end() ? 0 : it->second;
}

double IdfTable::Idf(std::string_view term) const {
  const double n = static_cast<double>(doc_count_);
  const double df = static_cast<double>(DocFrequency(term));
  return std::log((n + 1.0) / (df + 1.0)) + 1.0;
}

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& entry : entries) {
    if (!entries_.empty() && entries_.back().first == entry.first) {
      entries_.back().second += entry.second;
    } else {
      entries_.push_back(std::move(entry));
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return !(e.second > 0.0); });
  double sum = 0.0;
  for (const auto& [term, weight] : entries_) sum += weight * weight;
  norm_ = std::sqrt(sum);
}

double SparseVector::Weight(std::string_view term) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), term,
      [](const Entry& e, std::string_view t) { return e.first < t; });
  return (it != entries_.end() && it->first == term) ? it->second : 0.0;
}

SparseVector SparseVector::Scaled(double factor) const {
  std::vector<Entry> scaled = entries_;
  for (auto& entry : scaled) entry.second *= factor;
  return SparseVector(std::move(scaled));
}

double SparseVector::Dot(const SparseVector& other) const {
  double sum = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    const int cmp = a->first.compare(b->first);
    if (cmp == 0) {
      sum += a->second * b->second;
      ++a;
      ++b;
    } else if (cmp < 0) {
      ++a;
    } else {
      ++b;
    }
  }
  return sum;
}

SparseVector Vectorize(std::span<const std::string> tokens, const IdfTable& idf,
                       const PivotParams& pivot) {
  if (!(pivot.avg_doc_len > 0.0)) {
    throw InvalidArgument("pivot average document length must be positive");
  }
  if (pivot.slope < 0.0 || pivot.slope > 1.0) {
    throw InvalidArgument("pivot slope must lie in [0, 1]");
  }
  std::map<std::string_view, std::size_t> tf;
  for (const auto& token : tokens) ++tf[token];

  const double len = static_cast<double>(tokens.size());
  const double denominator =
      (1.0 - pivot.slope) + pivot.slope * (len / pivot.avg_doc_len);
  std::vector<SparseVector::Entry> entries;
  entries.reserve(tf.size());
  for (const auto& [term, count] : tf) {
    const double sublinear =
        1.0 + std::log(1.0 + std::log(static_cast<double>(count)));
    entries.emplace_back(std::string(term),
                         sublinear * idf.Idf(term) / denominator);
  }
  return SparseVector(std::move(entries));
}

double Cosine(const SparseVector& a, const SparseVector& b) {
  if (a.norm() == 0.0 || b.norm() == 0.0) return 0.0;
  const double value = a.Dot(b) / (a.norm() * b.norm());
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace citescope
