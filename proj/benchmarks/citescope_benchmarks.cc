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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "citescope/context.h"
#include "citescope/grouping.h"
#include "citescope/ranking.h"
#include "citescope/rouge.h"
#include "citescope/textproc.h"

namespace citescope {
namespace {

using Tokens = std::vector<std::string>;

std::vector<Tokens> RandomSentences(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> word(0, 199);
  std::uniform_int_distribution<std::size_t> length(5, 25);
  std::vector<Tokens> sentences(n);
  for (auto& s : sentences) {
    s.resize(length(rng));
    for (auto& t : s) t = "w" + std::to_string(word(rng));
  }
  return sentences;
}

Vectorizer MakeVectorizer(const std::vector<Tokens>& sentences) {
  return {IdfTable::Build(sentences), PivotParams{0.2, 15.0}};
}

Article MakeArticle(const std::vector<Tokens>& sentences) {
  Article article;
  article.id = "bench";
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    Sentence s;
    s.index = i;
    s.tokens = sentences[i];
    article.sentences.push_back(std::move(s));
  }
  return article;
}

WeightedGraph MakeGraph(std::size_t n, double min_edge) {
  const auto sentences = RandomSentences(n, n);
  const Vectorizer v = MakeVectorizer(sentences);
  std::vector<SparseVector> vectors;
  for (const auto& s : sentences) vectors.push_back(v(s));
  return BuildSimilarityGraph(vectors, min_edge);
}

void BM_Cosine(benchmark::State& state) {
  const auto sentences = RandomSentences(2, 1);
  const Vectorizer v = MakeVectorizer(sentences);
  const SparseVector a = v(sentences[0]);
  const SparseVector b = v(sentences[1]);
  for (auto _ : state) benchmark::DoNotOptimize(Cosine(a, b));
}
BENCHMARK(BM_Cosine);

void BM_RetrieveSpans(benchmark::State& state) {
  const auto sentences =
      RandomSentences(static_cast<std::size_t>(state.range(0)), 2);
  const Article article = MakeArticle(sentences);
  const Vectorizer v = MakeVectorizer(sentences);
  const SparseVector query = v(RandomSentences(1, 3).front());
  for (auto _ : state) {
    benchmark::DoNotOptimize(RetrieveReferenceSpans(query, article, 2, 3, v));
  }
}
BENCHMARK(BM_RetrieveSpans)->Arg(50)->Arg(200)->Arg(800);

void BM_Louvain(benchmark::State& state) {
  const WeightedGraph g =
      MakeGraph(static_cast<std::size_t>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(LouvainCommunities(g));
}
BENCHMARK(BM_Louvain)->Arg(25)->Arg(100)->Arg(300);

void BM_Centrality(benchmark::State& state) {
  const WeightedGraph g =
      MakeGraph(static_cast<std::size_t>(state.range(0)), 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(Centrality(g));
}
BENCHMARK(BM_Centrality)->Arg(25)->Arg(100)->Arg(300);

void BM_RougeL(benchmark::State& state) {
  const auto candidate =
      RandomSentences(static_cast<std::size_t>(state.range(0)), 4);
  std::vector<std::vector<Tokens>> golds;
  for (std::uint64_t g = 0; g < 4; ++g) {
    golds.push_back(
        RandomSentences(static_cast<std::size_t>(state.range(0)), 10 + g));
  }
  for (auto _ : state) benchmark::DoNotOptimize(RougeL(candidate, golds));
}
BENCHMARK(BM_RougeL)->Arg(5)->Arg(15);

void BM_Rouge2(benchmark::State& state) {
  Tokens candidate;
  for (const auto& s : RandomSentences(15, 5)) {
    candidate.insert(candidate.end(), s.begin(), s.end());
  }
  std::vector<Tokens> golds(4);
  for (std::size_t g = 0; g < golds.size(); ++g) {
    for (const auto& s : RandomSentences(15, 20 + g)) {
      golds[g].insert(golds[g].end(), s.begin(), s.end());
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(RougeN(candidate, golds, 2));
}
BENCHMARK(BM_Rouge2);

}  // namespace
}  // namespace citescope

BENCHMARK_MAIN();
