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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "citescope/errors.h"
#include "support/oracles.h"

namespace citescope {
namespace {

using Tokens = std::vector<std::string>;

const char kSenescenceCitation[] =
    "The general impression that has emerged is that transformation of human "
    "cells by Ras requires the inactivation of both the pRb and p53 pathways, "
    "typically achieved by introducing DNA tumor virus oncoproteins such as "
    "SV40 large tumor antigen (T-Ag) or human papillomavirus E6 and E7 "
    "proteins (Serrano et al., 1997).";

Citation MakeCitation(const std::string& text, const std::string& marker = "") {
  Citation citation;
  citation.id = "c1";
  citation.citing_article_id = "C";
  citation.text = text;
  citation.char_end = text.size();
  citation.marker = marker;
  return citation;
}

std::set<std::string> Terms(const SparseVector& v) {
  std::set<std::string> terms;
  for (const auto& [term, weight] : v.entries()) terms.insert(term);
  return terms;
}

TEST(StripCitationMarkersTest, Examples) {
  EXPECT_EQ(StripCitationMarkers("E6 and E7 proteins (Serrano et al., 1997)."),
            "E6 and E7 proteins .");
  EXPECT_EQ(StripCitationMarkers("arrest [12,13] in MEFs"), "arrest  in MEFs");
  EXPECT_EQ(StripCitationMarkers("no markers (here) at all"),
            "no markers (here) at all");
}

TEST(NounPhraseTest, Examples) {
  const Lexicons& lex = Lexicons::Default();
  const auto phrases = ExtractNounPhrases(
      "introducing DNA tumor virus oncoproteins such as SV40", lex);
  EXPECT_NE(
      std::find(phrases.begin(), phrases.end(), "dna tumor virus oncoproteins"),
      phrases.end());
  EXPECT_TRUE(ExtractNounPhrases("the and of a", lex).empty());
  EXPECT_EQ(ExtractNounPhrases("p53 pathways", lex),
            (std::vector<std::string>{"p53 pathways"}));
}

class QueryTest : public ::testing::Test {
 protected:
  Vectorizer vectorizer_{IdfTable::Build(std::vector<Tokens>{
                             {"ras", "p53"}, {"pathways"}, {"cells"}}),
                         {0.2, 10.0}};
  const Lexicons& lex_ = Lexicons::Default();
};

TEST_F(QueryTest, NounPhraseQueryContainsOncoproteinPhrase) {
  const SparseVector q = BuildCitationQuery(
      MakeCitation(kSenescenceCitation, "(Serrano et al., 1997)"),
      query::NounPhrase{}, vectorizer_, lex_);
  const auto terms = Terms(q);
  for (const char* t : {"dna", "tumor", "virus", "oncoproteins"}) {
    EXPECT_TRUE(terms.contains(t)) << t;
  }
  EXPECT_FALSE(terms.contains("achieved"));
  EXPECT_FALSE(terms.contains("serrano"));
  EXPECT_FALSE(terms.contains("1997"));
}

TEST_F(QueryTest, FullTextDropsStopwordsNumbersAndMarkers) {
  const SparseVector q = BuildCitationQuery(
      MakeCitation("In 1997 the p53 pathway [4] was (Lee, 2001) studied."),
      query::FullText{}, vectorizer_, lex_);
  EXPECT_EQ(Terms(q), (std::set<std::string>{"p53", "pathway", "studied"}));
}

TEST_F(QueryTest, StopwordsAndNumbersOnlyIsEmptyQuery) {
  EXPECT_THROW(BuildCitationQuery(MakeCitation("The 12 and 4.5 of the [3]."),
                                  query::FullText{}, vectorizer_, lex_),
               EmptyQuery);
}

TEST_F(QueryTest, KeywordIdfKeepsTopTermsByIdf) {
  // idf = ln((N+1)/(df+1)) + 1 with N = 10: df 0, 3, 7 rank x > y > z.
  const Vectorizer v{
      IdfTable::FromCounts(10, {{"xenon", 0}, {"yttrium", 3}, {"zinc", 7}}),
      {0.2, 3.0}};
  ASSERT_GT(v.idf.Idf("xenon"), v.idf.Idf("yttrium"));
  ASSERT_GT(v.idf.Idf("yttrium"), v.idf.Idf("zinc"));
  const SparseVector q = BuildCitationQuery(
      MakeCitation("zinc yttrium xenon zinc"), query::KeywordIdf{2}, v, lex_);
  EXPECT_EQ(Terms(q), (std::set<std::string>{"xenon", "yttrium"}));
}

TEST_F(QueryTest, KeywordIdfWithLargeTopKEqualsFullText) {
  const Citation c = MakeCitation(kSenescenceCitation, "(Serrano et al., 1997)");
  const SparseVector full =
      BuildCitationQuery(c, query::FullText{}, vectorizer_, lex_);
  const SparseVector keyword =
      BuildCitationQuery(c, query::KeywordIdf{1000}, vectorizer_, lex_);
  EXPECT_EQ(full.entries(), keyword.entries());
}

TEST_F(QueryTest, ConceptExpansionAddsSynonyms) {
  const SynonymDictionary dict = SynonymDictionary::Parse(
      "# test\ntumor virus\toncovirus|viral oncogen\n");
  EXPECT_EQ(dict.max_key_tokens(), 2u);
  const SparseVector q = BuildCitationQuery(
      MakeCitation("introducing DNA tumor virus oncoproteins"),
      query::ConceptExpanded{&dict}, vectorizer_, lex_);
  const auto terms = Terms(q);
  EXPECT_TRUE(terms.contains("oncovirus"));
  EXPECT_TRUE(terms.contains("oncogen"));
  EXPECT_TRUE(terms.contains("dna"));
  // The default dictionary is used when none is given.
  const SparseVector fallback =
      BuildCitationQuery(MakeCitation("tumor growth"), query::ConceptExpanded{},
                         vectorizer_, lex_);
  EXPECT_TRUE(Terms(fallback).contains("neoplasm"));
}

TEST(StrategyTest, NamesRoundTrip) {
  for (const char* name :
       {"full_text", "keyword_idf", "noun_phrase", "concept_expanded"}) {
    EXPECT_EQ(StrategyName(ParseStrategy(name, 5, nullptr)), name);
  }
  EXPECT_THROW(ParseStrategy("bm25", 5, nullptr), InvalidArgument);
}

// Three-sentence article with hand-picked token lists.
Article SmallArticle() {
  return oracle::ArticleFromTokens(
      {{"alpha", "beta"}, {"gamma", "delta"}, {"epsilon", "zeta"}});
}

Vectorizer SmallVectorizer(const Article& article) {
  std::vector<Tokens> docs;
  for (const auto& s : article.sentences) docs.push_back(s.tokens);
  return {IdfTable::Build(docs), {0.2, 2.0}};
}

TEST(RetrieveTest, IdenticalSentenceRanksFirstWithScoreOne) {
  const Article article = SmallArticle();
  const Vectorizer v = SmallVectorizer(article);
  const CitationContext context =
      RetrieveReferenceSpans(v(article.sentences[1].tokens), article, 2, 1, v);
  ASSERT_FALSE(context.spans.empty());
  EXPECT_EQ(context.spans[0].start, 1u);
  EXPECT_EQ(context.spans[0].length, 1u);
  EXPECT_DOUBLE_EQ(context.spans[0].score, 1.0);
}

TEST(RetrieveTest, OrthogonalQueryFallsBackToPositionOrder) {
  const Article article = SmallArticle();
  const Vectorizer v = SmallVectorizer(article);
  const CitationContext context =
      RetrieveReferenceSpans(SparseVector({{"omega", 1.0}}), article, 2, 2, v);
  ASSERT_EQ(context.spans.size(), 2u);
  EXPECT_EQ(context.spans[0].start, 0u);
  EXPECT_EQ(context.spans[0].length, 1u);
  EXPECT_EQ(context.spans[0].score, 0.0);
  EXPECT_EQ(context.spans[1].start, 1u);
}

TEST(RetrieveTest, JointSpanBeatsEitherSentence) {
  const Article article = SmallArticle();
  const Vectorizer v = SmallVectorizer(article);
  const SparseVector query = v(Tokens{"gamma", "delta", "epsilon", "zeta"});
  const CitationContext context =
      RetrieveReferenceSpans(query, article, 1, 2, v);
  ASSERT_EQ(context.spans.size(), 1u);
  EXPECT_EQ(context.spans[0].start, 1u);
  EXPECT_EQ(context.spans[0].length, 2u);
  const auto oracle_spans = oracle::BruteForceSpans(query, article, 1, 2, v);
  EXPECT_EQ(context.spans, oracle_spans);
}

TEST(RetrieveTest, Preconditions) {
  const Article article = SmallArticle();
  const Vectorizer v = SmallVectorizer(article);
  EXPECT_THROW(RetrieveReferenceSpans(SparseVector{}, article, 1, 1, v),
               EmptyQuery);
  EXPECT_THROW(RetrieveReferenceSpans(SparseVector({{"alpha", 1.0}}), Article{},
                                      1, 1, v),
               InvalidArgument);
  EXPECT_THROW(
      RetrieveReferenceSpans(SparseVector({{"alpha", 1.0}}), article, 0, 1, v),
      InvalidArgument);
}

TEST(RetrieveTest, MatchesBruteForceAndKeepsInvariants) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> word(0, 14);
  std::uniform_int_distribution<std::size_t> sentence_len(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Tokens> sentences(5 + trial % 20);
    for (auto& s : sentences) {
      s.resize(sentence_len(rng));
      for (auto& t : s) t = "w" + std::to_string(word(rng));
    }
    const Article article = oracle::ArticleFromTokens(sentences);
    const Vectorizer v = SmallVectorizer(article);
    Tokens query_tokens(4);
    for (auto& t : query_tokens) t = "w" + std::to_string(word(rng));
    const SparseVector query = v(query_tokens);
    const std::size_t k = 1 + trial % 4;
    const std::size_t window = 1 + trial % 3;
    const CitationContext context =
        RetrieveReferenceSpans(query, article, k, window, v);
    EXPECT_EQ(context.spans,
              oracle::BruteForceSpans(query, article, k, window, v));
    for (std::size_t i = 0; i < context.spans.size(); ++i) {
      const ReferenceSpan& span = context.spans[i];
      EXPECT_LE(span.length, window);
      EXPECT_GE(span.score, 0.0);
      EXPECT_LE(span.score, 1.0);
      if (i > 0) {
        EXPECT_LE(span.score, context.spans[i - 1].score);
      }
      for (std::size_t j = 0; j < i; ++j) {
        EXPECT_FALSE(span.Overlaps(context.spans[j]));
      }
    }
    // Deterministic.
    EXPECT_EQ(RetrieveReferenceSpans(query, article, k, window, v).spans,
              context.spans);
  }
}

}  // namespace
}  // namespace citescope
