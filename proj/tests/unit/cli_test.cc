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

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "citescope/corpus.h"
#include "citescope/errors.h"
#include "commands.h"

namespace citescope::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kCorpus = fs::path(CITESCOPE_FIXTURE_DIR) / "corpus";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cite-scope");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        fs::temp_directory_path() /
        ("citescope_cli_" +
         std::string(
             ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"stats"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"stats", "--corpus", kCorpus.string(), "--bogus"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST_F(CliTest, DataErrors) {
  EXPECT_EQ(Invoke({"stats", "--corpus", (dir_ / "missing").string()}).code,
            kExitDataError);
  // An unknown method name is a usage error.
  EXPECT_EQ(Invoke({"summarize", "--corpus", kCorpus.string(), "--method",
                    "nonsense", "-o", (dir_ / "out").string()})
                .code,
            kExitUsage);
  // Discourse methods need a model.
  EXPECT_EQ(Invoke({"summarize", "--corpus", kCorpus.string(), "--method",
                    "context-disc-it", "-o", (dir_ / "out").string()})
                .code,
            kExitDataError);
}

TEST_F(CliTest, StatsPrintsJson) {
  const auto r = Invoke({"stats", "--corpus", kCorpus.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"n_topics\": 3"), std::string::npos) << r.out;
}

TEST_F(CliTest, IngestRoundTrips) {
  const auto r = Invoke({"ingest", "--corpus", kCorpus.string(), "-o",
                         (dir_ / "ingested").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(LoadCorpus(dir_ / "ingested"), LoadCorpus(kCorpus));
  // Refuses to write into the corpus itself.
  EXPECT_NE(
      Invoke({"ingest", "--corpus", kCorpus.string(), "-o", kCorpus.string()})
          .code,
      kExitOk);
}

TEST_F(CliTest, SummarizeWritesDeterministicOutputs) {
  for (const char* run : {"a", "b"}) {
    const auto r = Invoke({"summarize", "--corpus", kCorpus.string(),
                           "--method", "lexrank", "--budget-words", "100", "-o",
                           (dir_ / run).string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  for (const auto& topic : LoadCorpus(kCorpus)) {
    const std::string text = ReadAll(dir_ / "a" / (topic.id + ".txt"));
    EXPECT_FALSE(text.empty());
    EXPECT_LE(CountWords(text), 100u);
    EXPECT_EQ(text, ReadAll(dir_ / "b" / (topic.id + ".txt")));
    EXPECT_TRUE(fs::exists(dir_ / "a" / (topic.id + ".json")));
  }
}

TEST_F(CliTest, ConfigFileSitsBetweenFlagsAndDefaults) {
  const fs::path config = dir_ / "run.ini";
  std::ofstream(config) << "budget_words=60\nmethod=lexrank\n";
  ASSERT_EQ(Invoke({"summarize", "--corpus", kCorpus.string(), "--config",
                    config.string(), "-o", (dir_ / "file").string()})
                .code,
            kExitOk);
  ASSERT_EQ(Invoke({"summarize", "--corpus", kCorpus.string(), "--config",
                    config.string(), "--budget-words", "30", "-o",
                    (dir_ / "flag").string()})
                .code,
            kExitOk);
  for (const auto& topic : LoadCorpus(kCorpus)) {
    const std::size_t from_file =
        CountWords(ReadAll(dir_ / "file" / (topic.id + ".txt")));
    EXPECT_LE(from_file, 60u);
    EXPECT_GT(from_file, 30u);
    EXPECT_LE(CountWords(ReadAll(dir_ / "flag" / (topic.id + ".txt"))), 30u);
  }
  std::ofstream(config) << "no_such_key=1\n";
  EXPECT_EQ(Invoke({"stats", "--corpus", kCorpus.string(), "--config",
                    config.string()})
                .code,
            kExitUsage);
}

TEST_F(CliTest, TrainFacetsThenSummarizeWithModel) {
  const fs::path model = dir_ / "model.json";
  const auto train = Invoke({"train-facets", "--corpus", kCorpus.string(),
                             "--holdout", "0", "-o", model.string()});
  ASSERT_EQ(train.code, kExitOk) << train.err;
  EXPECT_NO_THROW(FacetClassifier::FromJson(ReadAll(model)));
  const auto r = Invoke({"summarize", "--corpus", kCorpus.string(), "--method",
                         "context-disc-div", "--model", model.string(), "-o",
                         (dir_ / "out").string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST_F(CliTest, EvaluateMarksMissingSummaries) {
  ASSERT_EQ(Invoke({"summarize", "--corpus", kCorpus.string(), "--method",
                    "lsa", "-o", (dir_ / "lsa").string()})
                .code,
            kExitOk);
  const auto topics = LoadCorpus(kCorpus);
  fs::remove(dir_ / "lsa" / (topics[0].id + ".txt"));
  const auto r = Invoke({"evaluate", "--corpus", kCorpus.string(),
                         "--summaries", (dir_ / "lsa").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"absent\": true"), std::string::npos);
  EXPECT_NE(r.out.find("\"method\": \"lsa\""), std::string::npos);

  const auto oracle = Invoke({"evaluate", "--corpus", kCorpus.string(),
                              "--oracle", "-o", (dir_ / "scores").string()});
  ASSERT_EQ(oracle.code, kExitOk) << oracle.err;
  EXPECT_TRUE(fs::exists(dir_ / "scores" / "scores.csv"));
}

TEST_F(CliTest, CompareWritesTables) {
  const auto r = Invoke({"compare", "--corpus", kCorpus.string(), "--budgets",
                         "100", "-o", (dir_ / "cmp").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("mmr-0.5"), std::string::npos);
  EXPECT_NE(r.out.find("oracle"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "cmp" / "comparison.json"));
  EXPECT_TRUE(fs::exists(dir_ / "cmp" / "comparison.csv"));
}

TEST(CommandsTest, ParallelForRunsEveryIndexAndRethrowsFirstFailure) {
  std::vector<int> hits(50, 0);
  ParallelFor(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (const int h : hits) EXPECT_EQ(h, 1);
  try {
    ParallelFor(10, 3, [](std::size_t i) {
      if (i == 3 || i == 7) throw std::runtime_error(std::to_string(i));
    });
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "3");
  }
}

TEST(CommandsTest, GoldTruncationOnlyForShortBudgets) {
  EXPECT_EQ(GoldTruncation(100), 100u);
  EXPECT_EQ(GoldTruncation(50), 50u);
  EXPECT_FALSE(GoldTruncation(250).has_value());
}

TEST(CommandsTest, MakePipelineConfigValidates) {
  RunConfig config;
  const Resources resources = LoadResources(config);
  EXPECT_EQ(MakePipelineConfig(config, resources).k, 2u);
  config.k = 0;
  EXPECT_THROW(MakePipelineConfig(config, resources), Error);
  config.k = 2;
  config.lambda = 1.5;
  EXPECT_THROW(MakePipelineConfig(config, resources), Error);
}

}  // namespace
}  // namespace citescope::cli
