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

#include "citescope/selection.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "citescope/errors.h"
#include "support/selection_fixtures.h"

namespace citescope {
namespace {

CandidateSentence Make(std::string id, std::string text,
                       double centrality = 0.0) {
  std::vector<SparseVector::Entry> entries;
  for (const auto& token : Tokenize(text)) entries.emplace_back(token, 1.0);
  return {std::move(id), std::move(text), SparseVector(std::move(entries)),
          centrality};
}

std::vector<std::string> Ids(const Summary& summary) {
  std::vector<std::string> ids;
  for (const auto& s : summary.sentences) ids.push_back(s.source_id);
  return ids;
}

SelectionParams Budget(std::size_t words, double lambda = 0.7,
                       std::size_t top_m = 3) {
  SelectionParams params;
  params.budget_words = words;
  params.lambda = lambda;
  params.top_m = top_m;
  return params;
}

TEST(IterativeTest, RoundRobinStopsAfterSkippingRound) {
  const std::vector<SentenceGroup> groups = {
      {"A",
       {Make("a1", "one two three four five"),
        Make("a2", "six seven eight nine ten")}},
      {"B", {Make("b1", "alpha beta gamma delta eps")}}};
  const Summary s = SelectIterative(groups, Budget(12));
  EXPECT_EQ(Ids(s), (std::vector<std::string>{"a1", "b1"}));
  EXPECT_EQ(s.word_count, 10u);
  EXPECT_EQ(s.sentences[1].group_id, "B");
  EXPECT_EQ(s.sentences[1].rank, 0u);

  EXPECT_EQ(Ids(SelectIterative(groups, Budget(100))),
            (std::vector<std::string>{"a1", "b1", "a2"}));
}

TEST(IterativeTest, SkipsWhatDoesNotFitWithinTheRound) {
  const std::vector<SentenceGroup> groups = {
      {"A", {Make("a1", "w w w w w w w w w w"), Make("a2", "x")}},
      {"B", {Make("b1", "y y y")}}};
  // a1 is skipped, b1 still fits, and the round's skip ends selection.
  EXPECT_EQ(Ids(SelectIterative(groups, Budget(5))),
            (std::vector<std::string>{"b1"}));
}

TEST(IterativeTest, RepeatedSourcesAreIgnored) {
  const std::vector<SentenceGroup> groups = {
      {"A", {Make("s", "shared text here")}},
      {"B", {Make("s", "shared text here"), Make("t", "other")}}};
  EXPECT_EQ(Ids(SelectIterative(groups, Budget(50))),
            (std::vector<std::string>{"s", "t"}));
}

TEST(SelectionTest, EmptyGroupsThrow) {
  const std::vector<SentenceGroup> none;
  const std::vector<SentenceGroup> empty = {{"A", {}}};
  EXPECT_THROW(SelectIterative(none, Budget(10)), EmptyGroups);
  EXPECT_THROW(SelectIterative(empty, Budget(10)), EmptyGroups);
  EXPECT_THROW(SelectNovelty(empty, Budget(10)), EmptyGroups);
}

TEST(SelectionTest, ZeroBudgetSelectsNothing) {
  const std::vector<SentenceGroup> groups = {{"A", {Make("a", "text")}}};
  EXPECT_TRUE(SelectIterative(groups, Budget(0)).sentences.empty());
  EXPECT_TRUE(SelectNovelty(groups, Budget(0)).sentences.empty());
}

TEST(NoveltyTest, PureRedundancyPrefersNewContent) {
  const std::vector<SentenceGroup> groups = {
      {"A", {Make("s1", "apple", 0.5), Make("s2", "apple", 0.2)}},
      {"B", {Make("s3", "banana", 0.3)}}};
  const Summary s = SelectNovelty(groups, Budget(10, 0.0));
  EXPECT_EQ(Ids(s), (std::vector<std::string>{"s1", "s3", "s2"}));
  EXPECT_DOUBLE_EQ(s.sentences[1].score, 0.0);
  EXPECT_DOUBLE_EQ(s.sentences[2].score, -1.0);
}

TEST(NoveltyTest, RelevanceIsMeanSimilarityToRestOfPool) {
  // s1 and s2 share a term, s3 is unrelated: s3 has Sim1 = 0.
  const std::vector<SentenceGroup> groups = {
      {"A", {Make("s3", "zebra", 0.9)}},
      {"B", {Make("s1", "cell growth", 0.1), Make("s2", "cell death", 0.1)}}};
  const Summary s = SelectNovelty(groups, Budget(2, 1.0));
  ASSERT_EQ(s.sentences.size(), 1u);
  EXPECT_EQ(s.sentences[0].source_id, "s1");
  EXPECT_DOUBLE_EQ(s.sentences[0].score, 0.5 * 0.5);
}

TEST(NoveltyTest, PoolLimitedToTopM) {
  const std::vector<SentenceGroup> groups = {
      {"A", {Make("a1", "x"), Make("a2", "y"), Make("a3", "z")}}};
  EXPECT_EQ(SelectNovelty(groups, Budget(100, 0.7, 2)).sentences.size(), 2u);
}

TEST(OrderingTest, FacetGroupsFollowFixedOrder) {
  const std::vector<std::pair<Facet, SentenceGroup>> groups = {
      {Facet::kDiscussion, {"discussion", {Make("d", "d")}}},
      {Facet::kDataSetUsed, {"data", {Make("x", "x")}}},
      {Facet::kHypothesis, {"hypothesis", {Make("h", "h")}}},
      {Facet::kResults, {"results", {Make("r", "r")}}}};
  std::vector<std::string> ids;
  for (const auto& g : OrderFacetGroups(groups)) ids.push_back(g.id);
  EXPECT_EQ(ids,
            (std::vector<std::string>{"hypothesis", "results", "discussion"}));
}

TEST(OrderingTest, CommunityGroupsBySizeThenPosition) {
  std::vector<SentenceGroup> groups = {
      {"small", {Make("a", "a")}},
      {"big", {Make("b", "b"), Make("c", "c")}},
      {"small2", {Make("d", "d")}}};
  std::vector<std::string> ids;
  for (const auto& g : OrderCommunityGroups(groups)) ids.push_back(g.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"big", "small", "small2"}));
}

TEST(TruncateTest, KeepsLongestFittingPrefix) {
  const std::vector<SummarySentence> sentences = {{"1", "a b c", "", 0, 0.0},
                                                  {"2", "d e f g", "", 1, 0.0},
                                                  {"3", "h", "", 2, 0.0}};
  const Summary s = TruncateToBudget(sentences, 6);
  EXPECT_EQ(Ids(s), (std::vector<std::string>{"1"}));
  EXPECT_EQ(s.word_count, 3u);
  EXPECT_EQ(TruncateToBudget(sentences, 8).sentences.size(), 3u);
}

TEST(SummaryTest, TextAndProvenance) {
  Summary s;
  s.method = "iterative";
  s.sentences = {{"c1", "First one.", "g0", 0, 0.5},
                 {"c2", "Second.", "g1", 0, 0.25}};
  s.word_count = 3;
  EXPECT_EQ(s.ToText(), "First one.\nSecond.\n");
  const std::string json = s.ProvenanceJson();
  EXPECT_NE(json.find("\"source_id\": \"c2\""), std::string::npos);
  EXPECT_NE(json.find("\"words\": 2"), std::string::npos);
}

// Properties over random fixtures.
TEST(SelectionPropertyTest, BudgetDistinctnessAndDeterminism) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    auto fixture = fixtures::RandomSelectionFixture(rng);
    fixture.params.lambda = 0.2 * (trial % 6);
    for (const bool iterative : {true, false}) {
      const Summary a = iterative
                            ? SelectIterative(fixture.groups, fixture.params)
                            : SelectNovelty(fixture.groups, fixture.params);
      const Summary b = iterative
                            ? SelectIterative(fixture.groups, fixture.params)
                            : SelectNovelty(fixture.groups, fixture.params);
      EXPECT_EQ(a.sentences, b.sentences);
      std::size_t words = 0;
      std::set<std::string> ids;
      for (const auto& s : a.sentences) {
        words += CountWords(s.text);
        EXPECT_TRUE(ids.insert(s.source_id).second);
      }
      EXPECT_EQ(words, a.word_count);
      EXPECT_LE(a.word_count, fixture.params.budget_words);
    }
  }
}

TEST(SelectionPropertyTest, IterativeRanksAreNonDecreasing) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto fixture = fixtures::RandomSelectionFixture(rng);
    const Summary s = SelectIterative(fixture.groups, fixture.params);
    for (std::size_t i = 1; i < s.sentences.size(); ++i) {
      EXPECT_LE(s.sentences[i - 1].rank, s.sentences[i].rank);
    }
  }
}

TEST(SelectionPropertyTest, NoveltyWithLambdaOneFollowsRelevance) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto fixture = fixtures::RandomSelectionFixture(rng);
    EXPECT_EQ(Ids(SelectNovelty(fixture.groups, fixture.params)),
              fixtures::RelevanceOrderSelection(fixture));
  }
}

}  // namespace
}  // namespace citescope
