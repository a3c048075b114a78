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

// Acceptance suite: one PASS/FAIL line per criterion; exits non-zero if any
// criterion fails. Tolerances are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "citescope/baselines.h"
#include "citescope/context.h"
#include "citescope/corpus.h"
#include "citescope/grouping.h"
#include "citescope/linalg.h"
#include "citescope/ranking.h"
#include "citescope/rouge.h"
#include "citescope/selection.h"
#include "commands.h"
#include "support/oracles.h"
#include "support/rouge_fixtures.h"
#include "support/selection_fixtures.h"

namespace citescope {
namespace {

namespace fs = std::filesystem;

constexpr double kRougeTolerance = 1e-12;
constexpr double kRougeSeconds = 1.0;
constexpr double kModularityTolerance = 1e-12;
constexpr std::size_t kModularityGraphs = 60;
constexpr std::size_t kLouvainGraphs = 300;
constexpr double kLouvainGap = 0.05;
constexpr double kLouvainHitRate = 0.95;
constexpr double kLouvainSeconds = 30.0;
constexpr double kCentralityTolerance = 1e-6;
constexpr double kMassTolerance = 1e-12;
constexpr double kSvdRelTolerance = 1e-8;
constexpr double kReconstructionTolerance = 1e-6;
constexpr int kSelectionFixtures = 1000;
constexpr double kFacetAccuracy = 0.9;
constexpr double kHoldoutFraction = 0.2;
constexpr double kCompareSeconds = 60.0;
constexpr int kRetrievalQueries = 100;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Criterion 1: ROUGE hand fixtures and identity.
Outcome RougeSuite() {
  const auto start = Clock::now();
  Outcome outcome;
  const auto fixtures = fixtures::HandFixtures();
  std::size_t matched = 0;
  for (const auto& f : fixtures) {
    const RougeScore s = fixtures::Score(f);
    if (std::abs(s.recall - f.recall) <= kRougeTolerance &&
        std::abs(s.precision - f.precision) <= kRougeTolerance &&
        std::abs(s.f1 - f.f1) <= kRougeTolerance) {
      ++matched;
    } else {
      outcome.pass = false;
      outcome.detail += " mismatch:" + f.name;
    }
  }
  const std::vector<std::string> texts = {
      "The cat sat on the mat. It was warm.",
      "Ras induces senescence in primary cells. p16 accumulates."};
  std::size_t identity = 0;
  for (const auto& text : texts) {
    const std::vector<GoldSummary> gold = {{"g", text, CountWords(text)}};
    std::vector<std::string> candidate;
    for (const auto& s : SplitSentences(text, {})) candidate.push_back(s.text);
    for (const auto& [metric, score] :
         EvaluateSummary(candidate, gold, std::nullopt, {})) {
      if (score.recall == 1.0 && score.precision == 1.0 && score.f1 == 1.0) {
        ++identity;
      } else {
        outcome.pass = false;
        outcome.detail += " identity:" + std::string(RougeMetricName(metric));
      }
    }
  }
  const double elapsed = Seconds(start);
  outcome.pass =
      outcome.pass && fixtures.size() >= 10 && elapsed < kRougeSeconds;
  outcome.detail = std::to_string(matched) + "/" +
                   std::to_string(fixtures.size()) + " fixtures, " +
                   std::to_string(identity) + " identity checks, " +
                   std::to_string(elapsed) + " s" + outcome.detail;
  return outcome;
}

// Criterion 2: modularity against the literal double sum.
Outcome ModularitySuite() {
  Outcome outcome;
  std::size_t partitions = 0;
  double worst = 0.0;
  bool all_in_one_zero = true;
  for (const auto& g : oracle::GraphFamily(6, kModularityGraphs, 2014)) {
    oracle::ForEachPartition(
        g.num_nodes(), [&](const std::vector<std::size_t>& labels) {
          ++partitions;
          worst =
              std::max(worst, std::abs(Modularity(g, Partition(labels)) -
                                       oracle::DirectModularity(g, labels)));
        });
    all_in_one_zero &= Modularity(g, Partition::AllInOne(g.num_nodes())) == 0.0;
  }
  outcome.pass = worst <= kModularityTolerance && all_in_one_zero;
  char buffer[160];
  std::snprintf(
      buffer, sizeof(buffer),
      "%zu graphs, %zu partitions, max |dQ| = %.3g, all-in-one Q = 0: "
      "%s",
      kModularityGraphs, partitions, worst, all_in_one_zero ? "yes" : "no");
  outcome.detail = buffer;
  return outcome;
}

// Criterion 3: Louvain versus exhaustive search.
Outcome LouvainSuite() {
  const auto start = Clock::now();
  std::size_t near_optimal = 0;
  std::size_t below_singletons = 0;
  const auto family = oracle::GraphFamily(8, kLouvainGraphs, 1404);
  for (const auto& g : family) {
    const Partition p = LouvainCommunities(g);
    const double q = Modularity(g, p);
    if (q < Modularity(g, Partition::Singletons(g.num_nodes()))) {
      ++below_singletons;
    }
    if (oracle::BestModularity(g) - q <= kLouvainGap) ++near_optimal;
  }
  const double elapsed = Seconds(start);
  const double rate =
      static_cast<double>(near_optimal) / static_cast<double>(family.size());
  Outcome outcome;
  outcome.pass = below_singletons == 0 && rate >= kLouvainHitRate &&
                 elapsed < kLouvainSeconds;
  char buffer[160];
  std::snprintf(
      buffer, sizeof(buffer),
      "%zu graphs, within %.2f of optimum on %.1f%%, below singletons "
      "%zu, %.2f s",
      family.size(), kLouvainGap, 100.0 * rate, below_singletons, elapsed);
  outcome.detail = buffer;
  return outcome;
}

// Criterion 4: power method against a dense eigen-solve.
Outcome CentralitySuite() {
  std::mt19937_64 rng(412);
  double worst = 0.0;
  double worst_mass = 0.0;
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const WeightedGraph g =
          n == 1 ? WeightedGraph(1)
                 : oracle::RandomGraph(rng, n, 0.15 + 0.08 * trial, trial % 2);
      CentralityOptions options;
      options.damping = trial % 3 == 0 ? 0.1 : 0.05 + 0.1 * (trial % 5);
      options.tolerance = 1e-12;
      options.observer = [&](std::size_t, std::span<const double> p) {
        double mass = 0.0;
        for (const double x : p) mass += x;
        worst_mass = std::max(worst_mass, std::abs(mass - 1.0));
      };
      const auto scores = Centrality(g, options).score;
      const auto expected = oracle::DenseCentrality(g, options.damping);
      for (std::size_t v = 0; v < n; ++v) {
        worst = std::max(worst, std::abs(scores[v] - expected[v]));
      }
      ++graphs;
    }
  }
  Outcome outcome;
  outcome.pass = worst <= kCentralityTolerance && worst_mass <= kMassTolerance;
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%zu graphs up to 12x12, max L-inf = %.3g, max |mass - 1| = "
                "%.3g",
                graphs, worst, worst_mass);
  outcome.detail = buffer;
  return outcome;
}

// Criterion 5: SVD against the Gram-matrix eigenvalues.
Outcome SvdSuite() {
  std::mt19937_64 rng(2015);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::bernoulli_distribution zero(0.3);
  double worst_rel = 0.0;
  double worst_residual = 0.0;
  std::size_t matrices = 0;
  for (std::size_t rows = 1; rows <= 20; rows += 1) {
    for (std::size_t cols = 1; cols <= 15; cols += 2) {
      DenseMatrix a(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          a(r, c) = zero(rng) ? 0.0 : value(rng);
        }
      }
      const auto svd = Svd(a);
      const auto expected = oracle::GramSingularValues(a);
      const double scale = std::max(expected.front(), 1e-300);
      for (std::size_t i = 0; i < cols; ++i) {
        worst_rel = std::max(
            worst_rel, std::abs(svd.singular_values[i] - expected[i]) / scale);
      }
      const DenseMatrix back = svd.Reconstruct();
      for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst_residual =
            std::max(worst_residual, std::abs(back.data()[i] - a.data()[i]));
      }
      ++matrices;
    }
  }
  Outcome outcome;
  outcome.pass = worst_rel <= kSvdRelTolerance &&
                 worst_residual <= kReconstructionTolerance;
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%zu matrices up to 20x15, max rel error = %.3g, max residual "
                "= %.3g",
                matrices, worst_rel, worst_residual);
  outcome.detail = buffer;
  return outcome;
}

// Criterion 6: selection invariants on random fixtures.
Outcome SelectionSuite() {
  std::mt19937_64 rng(6);
  std::size_t over_budget = 0;
  std::size_t order_mismatch = 0;
  std::size_t nondeterministic = 0;
  for (int i = 0; i < kSelectionFixtures; ++i) {
    const auto fixture = fixtures::RandomSelectionFixture(rng);
    const Summary iterative = SelectIterative(fixture.groups, fixture.params);
    const Summary novelty = SelectNovelty(fixture.groups, fixture.params);
    for (const Summary* s : {&iterative, &novelty}) {
      std::size_t words = 0;
      for (const auto& sentence : s->sentences)
        words += CountWords(sentence.text);
      if (words > fixture.params.budget_words) ++over_budget;
    }
    std::vector<std::string> ids;
    for (const auto& sentence : novelty.sentences) {
      ids.push_back(sentence.source_id);
    }
    if (ids != fixtures::RelevanceOrderSelection(fixture)) ++order_mismatch;
    if (SelectIterative(fixture.groups, fixture.params).sentences !=
            iterative.sentences ||
        SelectNovelty(fixture.groups, fixture.params).sentences !=
            novelty.sentences) {
      ++nondeterministic;
    }
  }
  Outcome outcome;
  outcome.pass =
      over_budget == 0 && order_mismatch == 0 && nondeterministic == 0;
  outcome.detail = std::to_string(kSelectionFixtures) +
                   " fixtures, over budget " + std::to_string(over_budget) +
                   ", lambda=1 order mismatches " +
                   std::to_string(order_mismatch) + ", nondeterministic " +
                   std::to_string(nondeterministic);
  return outcome;
}

// Criterion 7: facet classifier on the separable facet corpus.
Outcome FacetSuite(const fs::path& data_dir) {
  const auto topics = LoadCorpus(data_dir / "facets");
  const cli::RunConfig run;
  const cli::Resources resources = cli::LoadResources(run);
  const PipelineConfig config = cli::MakePipelineConfig(run, resources);
  FacetTrainOptions train;
  train.seed = run.seed;
  const auto a = cli::TrainFacetModel(topics, resources.lexicons, config, train,
                                      {}, kHoldoutFraction);
  const auto b = cli::TrainFacetModel(topics, resources.lexicons, config, train,
                                      {}, kHoldoutFraction);
  const bool deterministic = a.classifier.ToJson() == b.classifier.ToJson();
  Outcome outcome;
  outcome.pass = a.held_out_accuracy >= kFacetAccuracy && deterministic;
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "held-out accuracy %.4f on %zu citations (trained on %zu "
                "examples), deterministic: %s",
                a.held_out_accuracy, a.held_out_examples, a.train_examples,
                deterministic ? "yes" : "no");
  outcome.detail = buffer;
  return outcome;
}

// Criterion 8: end-to-end comparison on the planted-topic corpus.
Outcome CompareSuite(const fs::path& data_dir) {
  const auto start = Clock::now();
  const auto topics = LoadCorpus(data_dir / "corpus");
  const cli::RunConfig run;
  const cli::Resources resources = cli::LoadResources(run);
  const PipelineConfig config = cli::MakePipelineConfig(run, resources);
  FacetTrainOptions train;
  train.seed = run.seed;
  const FacetClassifier classifier =
      cli::TrainFacetModel(topics, resources.lexicons, config, train, {}, 0.0)
          .classifier;
  cli::CompareOptions options;
  options.jobs = 1;
  const auto rows =
      cli::Compare(topics, config, resources.lexicons, &classifier, options);
  const double elapsed = Seconds(start);

  // 8 methods with MMR expanded to three lambdas, plus the oracle.
  const std::size_t expected_rows =
      (kAllMethods.size() - 1 + kMmrLambdas.size() + 1) *
      options.budgets.size() * 3;
  std::size_t failed = 0;
  for (const auto& row : rows) failed += row.error.empty() ? 0 : 1;

  bool dominates = true;
  std::string margins;
  for (const std::size_t budget : options.budgets) {
    double best_mmr = -1.0;
    for (const auto& row : rows) {
      if (row.budget == budget && row.metric == RougeMetric::kRouge1 &&
          row.method.starts_with("mmr")) {
        best_mmr = std::max(best_mmr, row.recall.mean);
      }
    }
    double worst_context = 2.0;
    for (const auto& row : rows) {
      if (row.budget == budget && row.metric == RougeMetric::kRouge1 &&
          row.method.starts_with("context-")) {
        worst_context = std::min(worst_context, row.recall.mean);
      }
    }
    dominates &= worst_context > best_mmr;
    char buffer[96];
    std::snprintf(buffer, sizeof(buffer),
                  " | %zu words: context >= %.3f vs mmr <= %.3f", budget,
                  worst_context, best_mmr);
    margins += buffer;
  }
  Outcome outcome;
  outcome.pass = elapsed < kCompareSeconds && rows.size() == expected_rows &&
                 failed == 0 && dominates;
  char buffer[128];
  std::snprintf(buffer, sizeof(buffer), "%zu/%zu rows, %zu failed, %.2f s",
                rows.size(), expected_rows, failed, elapsed);
  outcome.detail = buffer + margins;
  return outcome;
}

// Criterion 9: retrieval versus exhaustive window enumeration.
Outcome RetrievalSuite() {
  std::mt19937_64 rng(30);
  std::uniform_int_distribution<int> word(0, 19);
  std::uniform_int_distribution<std::size_t> sentence_len(1, 8);
  std::uniform_int_distribution<std::size_t> num_sentences(1, 30);
  std::size_t mismatches = 0;
  for (int q = 0; q < kRetrievalQueries; ++q) {
    std::vector<std::vector<std::string>> sentences(num_sentences(rng));
    for (auto& s : sentences) {
      s.resize(sentence_len(rng));
      for (auto& t : s) t = "w" + std::to_string(word(rng));
    }
    const Article article = oracle::ArticleFromTokens(sentences);
    std::size_t total = 0;
    for (const auto& s : sentences) total += s.size();
    const Vectorizer v{
        IdfTable::Build(sentences),
        PivotParams{0.2, static_cast<double>(total) /
                             static_cast<double>(sentences.size())}};
    std::vector<std::string> query_tokens(2 + q % 6);
    for (auto& t : query_tokens) t = "w" + std::to_string(word(rng));
    const SparseVector query = v(query_tokens);
    const std::size_t k = 1 + q % 4;
    const std::size_t window = 1 + q % 3;
    if (RetrieveReferenceSpans(query, article, k, window, v).spans !=
        oracle::BruteForceSpans(query, article, k, window, v)) {
      ++mismatches;
    }
  }
  Outcome outcome;
  outcome.pass = mismatches == 0;
  outcome.detail = std::to_string(kRetrievalQueries) +
                   " queries on articles of <= 30 sentences, mismatches " +
                   std::to_string(mismatches);
  return outcome;
}

}  // namespace
}  // namespace citescope

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  const fs::path data_dir =
      argc > 1 ? fs::path(argv[1]) : fs::path(CITESCOPE_FIXTURE_DIR);
  const std::vector<std::pair<std::string, std::function<citescope::Outcome()>>>
      criteria = {
          {"rouge oracle fixtures", citescope::RougeSuite},
          {"modularity vs direct formula", citescope::ModularitySuite},
          {"louvain quality", citescope::LouvainSuite},
          {"centrality vs dense eigen-solve", citescope::CentralitySuite},
          {"svd vs gram eigenvalues", citescope::SvdSuite},
          {"selection invariants", citescope::SelectionSuite},
          {"facet classifier", [&] { return citescope::FacetSuite(data_dir); }},
          {"end-to-end compare",
           [&] { return citescope::CompareSuite(data_dir); }},
          {"retrieval vs brute force", citescope::RetrievalSuite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    citescope::Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("%s %zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
