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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "citescope/errors.h"
#include "commands.h"

namespace citescope::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
}

bool SamePath(const std::filesystem::path& a, const std::filesystem::path& b) {
  std::error_code ec;
  return std::filesystem::weakly_canonical(a, ec) ==
         std::filesystem::weakly_canonical(b, ec);
}

std::filesystem::path CorpusDir(const std::filesystem::path& corpus) {
  return std::filesystem::is_directory(corpus) ? corpus : corpus.parent_path();
}

// Guards against writing into the corpus directory.
void RequireOutsideCorpus(const RunConfig& config) {
  Require(!config.output.empty(), "--output is required");
  Require(!SamePath(config.output, CorpusDir(config.corpus)),
          "--output must not be the corpus directory");
}

Method RequireMethod(const std::string& name) {
  const auto method = ParseMethod(name);
  Require(method.has_value(), "unknown method '" + name + "'");
  return *method;
}

std::optional<FacetClassifier> LoadModel(const RunConfig& config) {
  if (config.model.empty()) return std::nullopt;
  return FacetClassifier::FromJson(ReadFile(config.model));
}

// Label for a summaries directory: its last path component.
std::string DirectoryLabel(const std::filesystem::path& dir) {
  std::filesystem::path normal = dir.lexically_normal();
  if (normal.filename().empty()) normal = normal.parent_path();
  return normal.filename().string();
}

struct TrainFlags {
  std::size_t epochs = FacetTrainOptions{}.epochs;
  double svm_lambda = FacetTrainOptions{}.lambda;
  double learning_rate = FacetTrainOptions{}.learning_rate;
  double holdout = 0.2;
  bool citations_only = false;
};

struct EvaluateFlags {
  std::filesystem::path summaries;
  std::string label;
  bool oracle = false;
};

int Ingest(const RunConfig& config, std::ostream& out) {
  RequireOutsideCorpus(config);
  const std::vector<Topic> topics = LoadCorpus(config.corpus);
  const Resources resources = LoadResources(config);
  std::size_t sentences = 0;
  std::size_t citations = 0;
  for (const auto& topic : topics) {
    Article reference = topic.reference_article;
    PrepareArticle(reference, resources.lexicons);
    sentences += reference.sentences.size();
    citations += topic.citations.size();
  }
  WriteCorpus(topics, config.output);
  out << "ingested " << topics.size() << " topics, " << citations
      << " citations, " << sentences << " reference sentences into "
      << config.output.string() << '\n';
  return kExitOk;
}

int Stats(const RunConfig& config, std::ostream& out) {
  const std::vector<Topic> topics = LoadCorpus(config.corpus);
  out << StatsToJson(ComputeCorpusStats(topics)) << '\n';
  return kExitOk;
}

int Summarize(const RunConfig& config, std::ostream& out) {
  RequireOutsideCorpus(config);
  const Method method = RequireMethod(config.method);
  const Resources resources = LoadResources(config);
  const PipelineConfig pipeline = MakePipelineConfig(config, resources);
  const auto model = LoadModel(config);
  const std::vector<Topic> topics = LoadCorpus(config.corpus);
  const std::vector<Summary> summaries =
      SummarizeCorpus(topics, method, pipeline, resources.lexicons,
                      model ? &*model : nullptr, config.jobs);
  WriteSummaries(topics, summaries, config.output);
  for (std::size_t i = 0; i < topics.size(); ++i) {
    out << topics[i].id << ": " << summaries[i].sentences.size()
        << " sentences, " << summaries[i].word_count << " words\n";
  }
  return kExitOk;
}

int TrainFacets(const RunConfig& config, const TrainFlags& flags,
                std::ostream& out) {
  Require(!config.output.empty(), "--output (model file) is required");
  const Resources resources = LoadResources(config);
  const PipelineConfig pipeline = MakePipelineConfig(config, resources);
  const std::vector<Topic> topics = LoadCorpus(config.corpus);
  FacetTrainOptions train;
  train.epochs = flags.epochs;
  train.lambda = flags.svm_lambda;
  train.learning_rate = flags.learning_rate;
  train.seed = config.seed;
  FacetTrainingOptions data;
  data.include_reference_spans = !flags.citations_only;
  const FacetTrainingResult result = TrainFacetModel(
      topics, resources.lexicons, pipeline, train, data, flags.holdout);
  WriteFile(config.output, result.classifier.ToJson());
  std::ostringstream accuracy;
  accuracy.precision(4);
  accuracy << std::fixed << result.held_out_accuracy;
  out << "trained on " << result.train_examples << " examples; held-out "
      << "accuracy " << accuracy.str() << " on " << result.held_out_examples
      << " citations\n";
  return kExitOk;
}

int Evaluate(const RunConfig& config, const EvaluateFlags& flags,
             std::ostream& out) {
  Require(flags.oracle || !flags.summaries.empty(),
          "--summaries is required unless --oracle is given");
  const Resources resources = LoadResources(config);
  const std::vector<Topic> topics = LoadCorpus(config.corpus);
  const std::vector<ScoreRow> rows =
      flags.oracle ? OracleRows(topics, config.budget_words,
                                resources.lexicons.abbreviations)
                   : EvaluateDirectory(
                         topics, flags.summaries,
                         flags.label.empty() ? DirectoryLabel(flags.summaries)
                                             : flags.label,
                         config.budget_words, resources.lexicons.abbreviations);
  if (config.output.empty()) {
    out << ScoreRowsToJson(rows) << '\n';
    return kExitOk;
  }
  RequireOutsideCorpus(config);
  std::filesystem::create_directories(config.output);
  WriteFile(config.output / "scores.json", ScoreRowsToJson(rows) + "\n");
  WriteFile(config.output / "scores.csv", ScoreRowsToCsv(rows));
  std::size_t absent = 0;
  for (const auto& row : rows) absent += row.present ? 0 : 1;
  out << "wrote " << rows.size() << " score rows (" << absent << " absent) to "
      << config.output.string() << '\n';
  return kExitOk;
}

int CompareCommand(const RunConfig& config,
                   const std::vector<std::size_t>& budgets, std::ostream& out,
                   std::ostream& err) {
  const Resources resources = LoadResources(config);
  const PipelineConfig pipeline = MakePipelineConfig(config, resources);
  const std::vector<Topic> topics = LoadCorpus(config.corpus);
  std::optional<FacetClassifier> model = LoadModel(config);
  if (!model) {
    // Fall back to the corpus's own facet annotations.
    try {
      FacetTrainOptions train;
      train.seed = config.seed;
      model =
          TrainFacetModel(topics, resources.lexicons, pipeline, train, {}, 0.0)
              .classifier;
    } catch (const DegenerateData& e) {
      err << "warning: no facet model (" << e.what()
          << "); discourse methods will fail\n";
    }
  }
  CompareOptions options;
  options.budgets = budgets;
  options.jobs = config.jobs;
  const std::vector<ComparisonRow> rows = Compare(
      topics, pipeline, resources.lexicons, model ? &*model : nullptr, options);
  out << ComparisonToText(rows);
  if (!config.output.empty()) {
    RequireOutsideCorpus(config);
    std::filesystem::create_directories(config.output);
    WriteFile(config.output / "comparison.json", ComparisonToJson(rows));
    WriteFile(config.output / "comparison.csv", ComparisonToCsv(rows));
  }
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Extractive summaries of scientific articles from citation contexts.",
      "cite-scope"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Flat key=value config file")
      ->envname("CITESCOPE_CONFIG");
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig config;
  app.add_option("--corpus", config.corpus,
                 "Corpus directory (or its manifest.json)");
  app.add_option("--method", config.method, "Summarization method");
  app.add_option("--budget-words,--budget_words", config.budget_words,
                 "Summary length budget in words");
  app.add_option("--strategy", config.strategy,
                 "Citation query: full_text, keyword_idf, noun_phrase, "
                 "concept_expanded");
  app.add_option("--keyword-top-k,--keyword_top_k", config.keyword_top_k,
                 "Terms kept by keyword_idf");
  app.add_option("--lambda", config.lambda, "Novelty selection lambda");
  app.add_option("--top-m,--top_m", config.top_m,
                 "Sentences per group in the novelty pool");
  app.add_option("--window", config.window, "Maximum span length");
  app.add_option("-k,--k", config.k, "Spans retrieved per citation");
  app.add_option("--min-edge,--min_edge", config.min_edge,
                 "Minimum cosine for a similarity edge");
  app.add_option("-d,--damping", config.d, "Centrality jump weight");
  app.add_option("--mmr-lambda,--mmr_lambda", config.mmr_lambda,
                 "Lambda of the MMR baseline");
  app.add_option("--pivot-slope,--pivot_slope", config.pivot_slope,
                 "Pivoted length normalization slope");
  app.add_flag("--reference-only-idf,--reference_only_idf",
               config.reference_only_idf,
               "Compute idf over the reference article only");
  app.add_option("--seed", config.seed, "Seed for all randomness");
  app.add_option("-o,--output", config.output,
                 "Output directory (model file for train-facets)");
  app.add_option("--model", config.model, "Facet model JSON");
  app.add_option("-j,--jobs", config.jobs, "Worker threads; 0 uses all cores");
  app.add_option("--stopwords", config.stopwords, "Stopword list override");
  app.add_option("--abbreviations", config.abbreviations,
                 "Abbreviation list override");
  app.add_option("--verbs", config.verbs, "Verb lexicon override");
  app.add_option("--synonyms", config.synonyms, "Synonym dictionary override");

  auto* ingest =
      app.add_subcommand("ingest", "Validate a corpus and write it normalized");
  auto* stats = app.add_subcommand("stats", "Print corpus statistics as JSON");
  auto* summarize =
      app.add_subcommand("summarize", "Summarize every topic of a corpus");

  TrainFlags train;
  auto* train_facets = app.add_subcommand(
      "train-facets", "Train the discourse facet classifier");
  train_facets->add_option("--epochs", train.epochs, "SGD epochs");
  train_facets->add_option("--svm-lambda", train.svm_lambda,
                           "L2 regularization strength");
  train_facets->add_option("--learning-rate", train.learning_rate,
                           "Initial SGD step size");
  train_facets->add_option("--holdout", train.holdout,
                           "Held-out fraction of annotated citations");
  train_facets->add_flag("--citations-only", train.citations_only,
                         "Do not train on retrieved reference spans");

  EvaluateFlags evaluate;
  auto* evaluate_cmd =
      app.add_subcommand("evaluate", "Score summaries against gold summaries");
  evaluate_cmd->add_option("--summaries", evaluate.summaries,
                           "Directory of <topic>.txt summaries");
  evaluate_cmd->add_option("--label", evaluate.label,
                           "Method label (default: directory name)");
  evaluate_cmd->add_flag("--oracle", evaluate.oracle,
                         "Score leave-one-out gold agreement instead");

  std::vector<std::size_t> budgets = {100, 250};
  auto* compare =
      app.add_subcommand("compare", "Compare all methods and the oracle");
  compare->add_option("--budgets", budgets, "Budgets to evaluate")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (config.corpus.empty()) throw UsageError("--corpus is required");
    if (ingest->parsed()) return Ingest(config, out);
    if (stats->parsed()) return Stats(config, out);
    if (summarize->parsed()) return Summarize(config, out);
    if (train_facets->parsed()) return TrainFacets(config, train, out);
    if (evaluate_cmd->parsed()) return Evaluate(config, evaluate, out);
    if (compare->parsed()) return CompareCommand(config, budgets, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return IsDataError(e) ? kExitDataError : kExitRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitUsage;
}

}  // namespace citescope::cli
