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

#include "commands.h"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "citescope/baselines.h"
#include "citescope/errors.h"
#include "json.hpp"

namespace citescope::cli {
namespace {

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<ScoreRow> ReportRows(const std::string& topic,
                                 const std::string& method,
                                 const RougeReport* report) {
  std::vector<ScoreRow> rows;
  for (const RougeMetric metric : kAllRougeMetrics) {
    ScoreRow row;
    row.topic = topic;
    row.method = method;
    row.metric = metric;
    if (report == nullptr) {
      row.present = false;
    } else {
      const RougeScore& score = report->at(metric);
      row.recall = score.recall;
      row.precision = score.precision;
      row.f1 = score.f1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// One compared system: a method plus the config it runs under.
struct System {
  std::string name;
  Method method;
  PipelineConfig config;
};

std::string LambdaLabel(double lambda) {
  std::ostringstream label;
  label << "mmr-" << lambda;
  return label.str();
}

void AppendAggregate(const std::string& name, std::size_t budget,
                     const std::vector<RougeReport>& reports,
                     const std::string& error,
                     std::vector<ComparisonRow>& rows) {
  for (const RougeMetric metric : kAllRougeMetrics) {
    ComparisonRow row;
    row.method = name;
    row.budget = budget;
    row.metric = metric;
    row.error = error;
    if (error.empty()) {
      std::vector<double> recall, precision, f1;
      for (const auto& report : reports) {
        const RougeScore& score = report.at(metric);
        recall.push_back(score.recall);
        precision.push_back(score.precision);
        f1.push_back(score.f1);
      }
      row.n = reports.size();
      row.recall = ComputeMeanStd(recall);
      row.precision = ComputeMeanStd(precision);
      row.f1 = ComputeMeanStd(f1);
    }
    rows.push_back(std::move(row));
  }
}

}  // namespace

Resources LoadResources(const RunConfig& config) {
  Resources resources{Lexicons::Default(), SynonymDictionary::Default()};
  if (!config.stopwords.empty()) {
    resources.lexicons.stopwords = LoadWordList(config.stopwords);
  }
  if (!config.abbreviations.empty()) {
    resources.lexicons.abbreviations = LoadWordList(config.abbreviations);
  }
  if (!config.verbs.empty()) {
    resources.lexicons.verbs = LoadWordList(config.verbs);
  }
  if (!config.synonyms.empty()) {
    resources.synonyms = SynonymDictionary::Load(config.synonyms);
  }
  return resources;
}

PipelineConfig MakePipelineConfig(const RunConfig& config,
                                  const Resources& resources) {
  PipelineConfig pipeline;
  pipeline.strategy =
      ParseStrategy(config.strategy, config.keyword_top_k, &resources.synonyms);
  pipeline.k = config.k;
  pipeline.window = config.window;
  pipeline.min_edge = config.min_edge;
  pipeline.damping = config.d;
  pipeline.pivot_slope = config.pivot_slope;
  pipeline.reference_only_idf = config.reference_only_idf;
  pipeline.selection.budget_words = config.budget_words;
  pipeline.selection.lambda = config.lambda;
  pipeline.selection.top_m = config.top_m;
  pipeline.mmr_lambda = config.mmr_lambda;
  pipeline.louvain.seed = config.seed;
  if (config.k == 0 || config.window == 0) {
    throw InvalidArgument("k and window must be at least 1");
  }
  if (config.lambda < 0.0 || config.lambda > 1.0 || config.mmr_lambda < 0.0 ||
      config.mmr_lambda > 1.0) {
    throw InvalidArgument("lambda values must lie in [0, 1]");
  }
  if (config.d < 0.0 || config.d > 1.0) {
    throw InvalidArgument("d must lie in [0, 1]");
  }
  return pipeline;
}

std::size_t ResolveJobs(std::size_t jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

void ParallelFor(std::size_t n, std::size_t jobs,
                 const std::function<void(std::size_t)>& task) {
  std::vector<std::exception_ptr> errors(n);
  const std::size_t workers = std::min(ResolveJobs(jobs), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::mutex mutex;
    std::size_t next = 0;
    auto worker = [&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(mutex);
          if (next >= n) return;
          i = next++;
        }
        try {
          task(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& thread : threads) thread.join();
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

std::vector<Summary> SummarizeCorpus(std::span<const Topic> topics,
                                     Method method,
                                     const PipelineConfig& config,
                                     const Lexicons& lexicons,
                                     const FacetClassifier* classifier,
                                     std::size_t jobs) {
  if (NeedsClassifier(method) && classifier == nullptr) {
    throw InvalidArgument(std::string(MethodName(method)) +
                          " needs a trained facet model (--model)");
  }
  std::vector<Summary> summaries(topics.size());
  ParallelFor(topics.size(), jobs, [&](std::size_t i) {
    const PreparedTopic prepared = PrepareTopic(topics[i], lexicons, config);
    summaries[i] =
        SummarizeTopic(prepared, method, config, lexicons, classifier);
  });
  return summaries;
}

void WriteSummaries(std::span<const Topic> topics,
                    std::span<const Summary> summaries,
                    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < topics.size(); ++i) {
    WriteFile(dir / (topics[i].id + ".txt"), summaries[i].ToText());
    WriteFile(dir / (topics[i].id + ".json"), summaries[i].ProvenanceJson());
  }
}

FacetTrainingResult TrainFacetModel(std::span<const Topic> topics,
                                    const Lexicons& lexicons,
                                    const PipelineConfig& config,
                                    const FacetTrainOptions& train_options,
                                    const FacetTrainingOptions& data_options,
                                    double holdout_fraction) {
  const FacetSplit split =
      SplitFacetCorpus(topics, holdout_fraction, train_options.seed, lexicons);
  const std::vector<LabeledSpan> data =
      FacetTrainingData(split.train_topics, lexicons, config, data_options);
  if (data.empty()) {
    throw DegenerateData("corpus has no facet-annotated citations");
  }
  FacetTrainingResult result{
      FacetClassifier::Train(data, TrainingIdf(data), lexicons.verbs,
                             train_options),
      0.0, data.size(), split.held_out.size()};
  result.held_out_accuracy = FacetAccuracy(result.classifier, split.held_out);
  return result;
}

std::optional<std::size_t> GoldTruncation(std::size_t budget_words) {
  if (budget_words <= 100) return budget_words;
  return std::nullopt;
}

std::vector<ScoreRow> EvaluateDirectory(std::span<const Topic> topics,
                                        const std::filesystem::path& dir,
                                        const std::string& method,
                                        std::size_t budget_words,
                                        const WordSet& abbreviations) {
  std::vector<ScoreRow> rows;
  for (const auto& topic : topics) {
    const std::filesystem::path path = dir / (topic.id + ".txt");
    std::ifstream in(path);
    if (!in) {
      auto absent = ReportRows(topic.id, method, nullptr);
      rows.insert(rows.end(), absent.begin(), absent.end());
      continue;
    }
    std::vector<std::string> sentences;
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) sentences.push_back(line);
    }
    const RougeReport report =
        EvaluateSummary(sentences, topic.gold_summaries,
                        GoldTruncation(budget_words), abbreviations);
    auto scored = ReportRows(topic.id, method, &report);
    rows.insert(rows.end(), scored.begin(), scored.end());
  }
  return rows;
}

std::vector<ScoreRow> OracleRows(std::span<const Topic> topics,
                                 std::size_t budget_words,
                                 const WordSet& abbreviations) {
  std::vector<ScoreRow> rows;
  for (const auto& topic : topics) {
    const auto report = OracleScore(
        topic.gold_summaries, GoldTruncation(budget_words), abbreviations);
    auto scored = ReportRows(topic.id, "oracle", report ? &*report : nullptr);
    rows.insert(rows.end(), scored.begin(), scored.end());
  }
  return rows;
}

std::vector<ComparisonRow> Compare(std::span<const Topic> topics,
                                   const PipelineConfig& config,
                                   const Lexicons& lexicons,
                                   const FacetClassifier* classifier,
                                   const CompareOptions& options) {
  std::vector<ComparisonRow> rows;
  for (const std::size_t budget : options.budgets) {
    PipelineConfig base = config;
    base.selection.budget_words = budget;
    std::vector<System> systems;
    for (const Method method : kAllMethods) {
      if (method != Method::kMmr) {
        systems.push_back({std::string(MethodName(method)), method, base});
        continue;
      }
      for (const double lambda : kMmrLambdas) {
        System system{LambdaLabel(lambda), method, base};
        system.config.mmr_lambda = lambda;
        systems.push_back(std::move(system));
      }
    }
    const auto truncation = GoldTruncation(budget);
    for (const auto& system : systems) {
      std::vector<RougeReport> reports(topics.size());
      std::string error;
      try {
        const std::vector<Summary> summaries =
            SummarizeCorpus(topics, system.method, system.config, lexicons,
                            classifier, options.jobs);
        for (std::size_t t = 0; t < topics.size(); ++t) {
          reports[t] =
              EvaluateSummary(summaries[t].Texts(), topics[t].gold_summaries,
                              truncation, lexicons.abbreviations);
        }
      } catch (const Error& e) {
        error = e.what();
      }
      AppendAggregate(system.name, budget, reports, error, rows);
    }
    std::vector<RougeReport> oracle;
    for (const auto& topic : topics) {
      if (auto report = OracleScore(topic.gold_summaries, truncation,
                                    lexicons.abbreviations)) {
        oracle.push_back(std::move(*report));
      }
    }
    AppendAggregate("oracle", budget, oracle,
                    oracle.empty() ? "no topic has two gold summaries" : "",
                    rows);
  }
  return rows;
}

std::string ComparisonToJson(std::span<const ComparisonRow> rows) {
  nlohmann::ordered_json root = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json node;
    node["method"] = row.method;
    node["budget"] = row.budget;
    node["metric"] = std::string(RougeMetricName(row.metric));
    node["n"] = row.n;
    for (const auto& [name, value] :
         {std::pair{"recall", row.recall},
          std::pair{"precision", row.precision}, std::pair{"f1", row.f1}}) {
      node[name] = {{"mean", value.mean}, {"std", value.std}};
    }
    if (!row.error.empty()) node["error"] = row.error;
    root.push_back(std::move(node));
  }
  return root.dump(2) + "\n";
}

std::string ComparisonToCsv(std::span<const ComparisonRow> rows) {
  std::ostringstream out;
  out << std::setprecision(10);
  out << "method,budget,metric,n,recall_mean,recall_std,precision_mean,"
         "precision_std,f1_mean,f1_std,error\n";
  for (const auto& row : rows) {
    std::string error = row.error;
    std::replace(error.begin(), error.end(), '"', '\'');
    out << row.method << ',' << row.budget << ',' << RougeMetricName(row.metric)
        << ',' << row.n << ',' << row.recall.mean << ',' << row.recall.std
        << ',' << row.precision.mean << ',' << row.precision.std << ','
        << row.f1.mean << ',' << row.f1.std << ",\"" << error << "\"\n";
  }
  return out.str();
}

std::string ComparisonToText(std::span<const ComparisonRow> rows) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << std::left << std::setw(18) << "method" << std::setw(8) << "budget"
      << std::setw(8) << "metric" << std::setw(18) << "recall" << std::setw(18)
      << "precision" << "f1\n";
  auto cell = [](const MeanStd& value) {
    std::ostringstream text;
    text << std::fixed << std::setprecision(4) << value.mean << " ± "
         << value.std;
    return text.str();
  };
  for (const auto& row : rows) {
    out << std::left << std::setw(18) << row.method << std::setw(8)
        << row.budget << std::setw(8) << RougeMetricName(row.metric);
    if (!row.error.empty()) {
      out << "failed: " << row.error << '\n';
      continue;
    }
    // Pad on visible width; "±" is two bytes.
    out << std::setw(19) << cell(row.recall) << std::setw(19)
        << cell(row.precision) << cell(row.f1) << '\n';
  }
  return out.str();
}

}  // namespace citescope::cli
