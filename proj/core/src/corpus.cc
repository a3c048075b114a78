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

#include "citescope/corpus.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "citescope/errors.h"
#include "citescope/utf8.h"
#include "json.hpp"

namespace citescope {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

constexpr std::array<std::string_view, 6> kFacetNames = {
    "hypothesis",  "method",     "results",
    "implication", "discussion", "data_set_used"};

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << data;
  if (!out) throw IoError("error writing " + path.string());
}

// Schema accessors that report failures as JSON pointers.
class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void Fail(const std::string& pointer,
                         const std::string& what) const {
    throw MalformedCorpus(pointer,
                          source_.empty() ? what : what + " in " + source_);
  }

  const Json& Object(const Json& parent, const std::string& key,
                     const std::string& pointer) const {
    const Json& value = Member(parent, key, pointer);
    if (!value.is_object()) Fail(pointer + "/" + key, "expected an object");
    return value;
  }

  const Json& Array(const Json& parent, const std::string& key,
                    const std::string& pointer) const {
    const Json& value = Member(parent, key, pointer);
    if (!value.is_array()) Fail(pointer + "/" + key, "expected an array");
    return value;
  }

  std::string String(const Json& parent, const std::string& key,
                     const std::string& pointer, bool required = true) const {
    if (!required && (!parent.contains(key) || parent.at(key).is_null())) {
      return {};
    }
    const Json& value = Member(parent, key, pointer);
    if (!value.is_string()) Fail(pointer + "/" + key, "expected a string");
    return value.get<std::string>();
  }

  std::size_t Offset(const Json& parent, const std::string& key,
                     const std::string& pointer) const {
    const Json& value = Member(parent, key, pointer);
    if (!value.is_number_unsigned()) {
      if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
        return value.get<std::size_t>();
      }
      Fail(pointer + "/" + key, "expected a non-negative integer");
    }
    return value.get<std::size_t>();
  }

 private:
  const Json& Member(const Json& parent, const std::string& key,
                     const std::string& pointer) const {
    if (!parent.is_object()) Fail(pointer, "expected an object");
    const auto it = parent.find(key);
    if (it == parent.end()) Fail(pointer + "/" + key, "missing key");
    return *it;
  }

  std::string source_;
};

Article ParseArticle(const Reader& reader, const Json& node,
                     const std::string& pointer) {
  if (!node.is_object()) reader.Fail(pointer, "expected an object");
  Article article;
  article.id = reader.String(node, "id", pointer);
  if (article.id.empty()) reader.Fail(pointer + "/id", "empty article id");
  article.title = reader.String(node, "title", pointer, /*required=*/false);
  article.text = reader.String(node, "text", pointer);
  return article;
}

OrderedJson ArticleJson(const Article& article) {
  OrderedJson node;
  node["id"] = article.id;
  node["title"] = article.title;
  node["text"] = article.text;
  return node;
}

double Mean(std::span<const double> sorted) {
  double sum = 0.0;
  for (const double v : sorted) sum += v;
  return sum / static_cast<double>(sorted.size());
}

}  // namespace

std::string_view FacetName(Facet facet) {
  return kFacetNames[static_cast<std::size_t>(facet)];
}

std::optional<Facet> ParseFacet(std::string_view name) {
  if (name == "data-set-used") return Facet::kDataSetUsed;
  for (std::size_t i = 0; i < kFacetNames.size(); ++i) {
    if (kFacetNames[i] == name) return kAllFacets[i];
  }
  return std::nullopt;
}

const Article* Topic::FindCitingArticle(std::string_view article_id) const {
  for (const auto& article : citing_articles) {
    if (article.id == article_id) return &article;
  }
  return nullptr;
}

Topic ParseTopic(std::string_view json_text, const std::string& source) {
  const Reader reader(source);
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    reader.Fail("", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) reader.Fail("", "topic must be a JSON object");

  Topic topic;
  topic.id = reader.String(root, "id", "");
  if (topic.id.empty()) reader.Fail("/id", "empty topic id");
  topic.reference_article =
      ParseArticle(reader, reader.Object(root, "reference_article", ""),
                   "/reference_article");

  std::set<std::string> article_ids;
  const Json& citing = reader.Array(root, "citing_articles", "");
  for (std::size_t i = 0; i < citing.size(); ++i) {
    const std::string pointer = "/citing_articles/" + std::to_string(i);
    Article article = ParseArticle(reader, citing[i], pointer);
    if (!article_ids.insert(article.id).second) {
      reader.Fail(pointer + "/id", "duplicate citing article id");
    }
    topic.citing_articles.push_back(std::move(article));
  }

  const Json& citations = reader.Array(root, "citations", "");
  if (citations.empty()) reader.Fail("/citations", "topic has no citations");
  std::set<std::string> citation_ids;
  for (std::size_t i = 0; i < citations.size(); ++i) {
    const std::string pointer = "/citations/" + std::to_string(i);
    const Json& node = citations[i];
    if (!node.is_object()) reader.Fail(pointer, "expected an object");
    Citation citation;
    citation.id = reader.String(node, "id", pointer);
    if (!citation_ids.insert(citation.id).second) {
      reader.Fail(pointer + "/id", "duplicate citation id");
    }
    citation.citing_article_id =
        reader.String(node, "citing_article_id", pointer);
    const Article* article =
        topic.FindCitingArticle(citation.citing_article_id);
    if (article == nullptr) {
      reader.Fail(
          pointer + "/citing_article_id",
          "unknown citing article '" + citation.citing_article_id + "'");
    }
    citation.text = reader.String(node, "text", pointer);
    citation.char_start = reader.Offset(node, "char_start", pointer);
    citation.char_end = reader.Offset(node, "char_end", pointer);
    const std::size_t length = utf8::ScalarCount(article->text);
    if (citation.char_start > citation.char_end) {
      reader.Fail(pointer + "/char_start", "char_start exceeds char_end");
    }
    if (citation.char_end > length) {
      reader.Fail(pointer + "/char_end", "offset " +
                                             std::to_string(citation.char_end) +
                                             " past end of article text (" +
                                             std::to_string(length) + ")");
    }
    citation.marker = reader.String(node, "marker", pointer, false);
    if (!citation.marker.empty() &&
        citation.text.find(citation.marker) == std::string::npos) {
      reader.Fail(pointer + "/marker", "marker is not part of the text");
    }
    if (node.contains("facet") && !node.at("facet").is_null()) {
      const std::string name = reader.String(node, "facet", pointer);
      citation.facet = ParseFacet(name);
      if (!citation.facet) {
        reader.Fail(pointer + "/facet", "unknown facet '" + name + "'");
      }
    }
    topic.citations.push_back(std::move(citation));
  }

  const Json& golds = reader.Array(root, "gold_summaries", "");
  for (std::size_t i = 0; i < golds.size(); ++i) {
    const std::string pointer = "/gold_summaries/" + std::to_string(i);
    GoldSummary gold;
    gold.annotator_id = reader.String(golds[i], "annotator_id", pointer);
    gold.text = reader.String(golds[i], "text", pointer);
    gold.word_count = CountWords(gold.text);
    if (gold.word_count > kMaxGoldWords) {
      reader.Fail(pointer + "/text",
                  "gold summary has " + std::to_string(gold.word_count) +
                      " words (limit " + std::to_string(kMaxGoldWords) + ")");
    }
    topic.gold_summaries.push_back(std::move(gold));
  }
  return topic;
}

std::string SerializeTopic(const Topic& topic) {
  OrderedJson root;
  root["id"] = topic.id;
  root["reference_article"] = ArticleJson(topic.reference_article);
  root["citing_articles"] = OrderedJson::array();
  for (const auto& article : topic.citing_articles) {
    root["citing_articles"].push_back(ArticleJson(article));
  }
  root["citations"] = OrderedJson::array();
  for (const auto& citation : topic.citations) {
    OrderedJson node;
    node["id"] = citation.id;
    node["citing_article_id"] = citation.citing_article_id;
    node["text"] = citation.text;
    node["char_start"] = citation.char_start;
    node["char_end"] = citation.char_end;
    node["marker"] = citation.marker;
    node["facet"] = citation.facet
                        ? OrderedJson(std::string(FacetName(*citation.facet)))
                        : OrderedJson(nullptr);
    root["citations"].push_back(std::move(node));
  }
  root["gold_summaries"] = OrderedJson::array();
  for (const auto& gold : topic.gold_summaries) {
    OrderedJson node;
    node["annotator_id"] = gold.annotator_id;
    node["text"] = gold.text;
    root["gold_summaries"].push_back(std::move(node));
  }
  return root.dump(2) + "\n";
}

std::vector<Topic> LoadCorpus(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw IoError("corpus path does not exist: " + path.string());
  }
  const std::filesystem::path manifest_path =
      std::filesystem::is_directory(path, ec) ? path / "manifest.json" : path;
  const std::string manifest_text = ReadFile(manifest_path);
  const Reader reader(manifest_path.string());
  Json manifest;
  try {
    manifest = Json::parse(manifest_text);
  } catch (const Json::parse_error& e) {
    reader.Fail("", std::string("invalid JSON: ") + e.what());
  }
  const Json& files = reader.Array(manifest, "topics", "");

  const std::filesystem::path base = manifest_path.parent_path();
  std::vector<Topic> topics;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!files[i].is_string()) {
      reader.Fail("/topics/" + std::to_string(i), "expected a file name");
    }
    const std::filesystem::path file = base / files[i].get<std::string>();
    Topic topic = ParseTopic(ReadFile(file), file.string());
    if (!ids.insert(topic.id).second) {
      throw MalformedCorpus(
          "/id", "duplicate topic id '" + topic.id + "' in " + file.string());
    }
    topics.push_back(std::move(topic));
  }
  return topics;
}

void WriteCorpus(std::span<const Topic> topics,
                 const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  OrderedJson manifest;
  manifest["topics"] = OrderedJson::array();
  for (const auto& topic : topics) {
    const std::string name = topic.id + ".json";
    WriteFile(dir / name, SerializeTopic(topic));
    manifest["topics"].push_back(name);
  }
  WriteFile(dir / "manifest.json", manifest.dump(2) + "\n");
}

void PrepareArticle(Article& article, const Lexicons& lexicons) {
  article.sentences = SplitSentences(article.text, lexicons.abbreviations);
  const TokenizeOptions options{&lexicons.stopwords, /*drop_numeric=*/true};
  for (auto& sentence : article.sentences) {
    sentence.article_id = article.id;
    sentence.tokens = Tokenize(sentence.text, options);
  }
}

MeanStd ComputeMeanStd(std::span<const double> values) {
  if (values.empty()) return {};
  // Sorted summation keeps the result independent of input order.
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  MeanStd result;
  result.mean = Mean(sorted);
  std::vector<double> squares;
  squares.reserve(sorted.size());
  for (const double v : sorted) {
    squares.push_back((v - result.mean) * (v - result.mean));
  }
  std::sort(squares.begin(), squares.end());
  result.std = std::sqrt(Mean(squares));
  return result;
}

CorpusStats ComputeCorpusStats(std::span<const Topic> topics) {
  CorpusStats stats;
  stats.n_topics = topics.size();
  std::vector<double> golds, citing, per_citing, summary_len, article_len;
  for (const auto& topic : topics) {
    golds.push_back(static_cast<double>(topic.gold_summaries.size()));
    citing.push_back(static_cast<double>(topic.citing_articles.size()));
    for (const auto& article : topic.citing_articles) {
      const auto count = std::count_if(
          topic.citations.begin(), topic.citations.end(),
          [&](const Citation& c) { return c.citing_article_id == article.id; });
      per_citing.push_back(static_cast<double>(count));
    }
    for (const auto& gold : topic.gold_summaries) {
      summary_len.push_back(static_cast<double>(gold.word_count));
    }
    article_len.push_back(
        static_cast<double>(CountWords(topic.reference_article.text)));
    for (const auto& citation : topic.citations) {
      if (citation.facet) ++stats.facet_counts[*citation.facet];
    }
  }
  stats.gold_per_topic = ComputeMeanStd(golds);
  stats.citing_per_topic = ComputeMeanStd(citing);
  stats.citations_per_citing = ComputeMeanStd(per_citing);
  stats.summary_len_words = ComputeMeanStd(summary_len);
  stats.article_len_words = ComputeMeanStd(article_len);
  return stats;
}

std::string StatsToJson(const CorpusStats& stats) {
  auto pair = [](const MeanStd& m) {
    OrderedJson node;
    node["mean"] = m.mean;
    node["std"] = m.std;
    return node;
  };
  OrderedJson root;
  root["n_topics"] = stats.n_topics;
  root["gold_per_topic"] = pair(stats.gold_per_topic);
  root["citing_per_topic"] = pair(stats.citing_per_topic);
  root["citations_per_citing"] = pair(stats.citations_per_citing);
  root["summary_len_words"] = pair(stats.summary_len_words);
  root["article_len_words"] = pair(stats.article_len_words);
  OrderedJson facets = OrderedJson::object();
  for (const auto& [facet, count] : stats.facet_counts) {
    facets[std::string(FacetName(facet))] = count;
  }
  root["facet_counts"] = facets;
  return root.dump(2) + "\n";
}

}  // namespace citescope
