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

#ifndef CITESCOPE_GROUPING_H_
#define CITESCOPE_GROUPING_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citescope/corpus.h"
#include "citescope/textproc.h"

namespace citescope {

// Undirected graph with non-negative edge weights held as a dense symmetric
// matrix. Degree k_v = sum_w A_vw and 2m = sum_v k_v, so m counts each
// undirected edge once.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t num_nodes = 0);

  std::size_t num_nodes() const { return n_; }

  // Sets A_uv = A_vu = weight. u == v adds an explicit self-loop.
  // Throws InvalidArgument for negative weights or bad node ids.
  void SetEdge(std::size_t u, std::size_t v, double weight);
  double Weight(std::size_t u, std::size_t v) const {
    return adjacency_[u * n_ + v];
  }
  std::span<const double> Row(std::size_t v) const {
    return {adjacency_.data() + v * n_, n_};
  }

  double Degree(std::size_t v) const;
  // Sum of all A_vw over ordered pairs (= 2m).
  double TotalWeightTwice() const;
  std::size_t EdgeCount() const;

 private:
  std::size_t n_;
  std::vector<double> adjacency_;
};

// Edge (u, v) for every pair with cosine >= min_edge and cosine > 0.
WeightedGraph BuildSimilarityGraph(std::span<const SparseVector> vectors,
                                   double min_edge);

class Partition {
 public:
  Partition() = default;
  // Relabels communities densely from 0 in order of first appearance.
  explicit Partition(std::vector<std::size_t> assignment);

  static Partition Singletons(std::size_t n);
  static Partition AllInOne(std::size_t n);

  std::size_t community(std::size_t node) const { return assignment_[node]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  std::size_t num_nodes() const { return assignment_.size(); }
  std::size_t num_communities() const { return num_communities_; }
  std::vector<std::vector<std::size_t>> Members() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> assignment_;
  std::size_t num_communities_ = 0;
};

// Newman modularity. Throws EmptyGraph if m == 0 and InvalidArgument on a
// size mismatch.
double Modularity(const WeightedGraph& graph, const Partition& partition);

struct LouvainOptions {
  // Nodes are swept in ascending id order unless this is set, in which case
  // the order is a seeded shuffle.
  bool shuffle_order = false;
  std::uint64_t seed = 42;
  // Minimum modularity gain that counts as an improvement.
  double min_gain = 1e-12;
};

// Multi-level modularity maximization: local moving of single nodes, then
// aggregation into community super-nodes, repeated until no level changes
// anything. A final local-moving pass on the original graph guarantees no
// single-node move can increase Q. Throws EmptyGraph if m == 0.
Partition LouvainCommunities(const WeightedGraph& graph,
                             const LouvainOptions& options = {});

struct LabeledSpan {
  std::vector<std::string> tokens;
  Facet facet = Facet::kHypothesis;
};

struct FacetTrainOptions {
  std::size_t epochs = 50;
  double lambda = 1e-4;
  double learning_rate = 0.1;
  std::uint64_t seed = 42;
};

// One-vs-rest linear classifier over L2-normalized tf-idf unigram and
// `verb:<token>` features, trained with squared-hinge SGD.
class FacetClassifier {
 public:
  // Throws DegenerateData when `data` spans fewer than two facets.
  static FacetClassifier Train(std::span<const LabeledSpan> data,
                               const IdfTable& idf, const WordSet& verbs,
                               const FacetTrainOptions& options = {});

  Facet Classify(std::span<const std::string> tokens) const;
  // Decision value per facet, indexed like kAllFacets.
  std::vector<double> DecisionValues(std::span<const std::string> tokens) const;

  // Model JSON: {"facets": {name: {"bias", "weights": {feature: w}}},
  //              "idf": {"doc_count", "df"}, "verbs": [...]}.
  std::string ToJson() const;
  static FacetClassifier FromJson(std::string_view json_text);

  std::size_t num_features() const { return features_.size(); }
  const std::vector<Facet>& trained_facets() const { return trained_; }

 private:
  // Sparse (feature index, value) with unit L2 norm; unknown features dropped.
  std::vector<std::pair<std::size_t, double>> Features(
      std::span<const std::string> tokens) const;

  IdfTable idf_;
  WordSet verbs_;
  std::map<std::string, std::size_t, std::less<>> features_;
  std::vector<Facet> trained_;
  // weights_[facet][feature], bias_[facet]; facet indexed as kAllFacets.
  std::vector<std::vector<double>> weights_;
  std::vector<double> bias_;
};

// Group id -> member item indices, ascending within each group.
using Groups = std::map<std::size_t, std::vector<std::size_t>>;

// Community grouping over the items' similarity graph. An edgeless graph
// puts every item in its own group.
Groups GroupByCommunity(std::span<const SparseVector> items, double min_edge,
                        const LouvainOptions& options = {});

// Discourse grouping: group id is the facet's index in kAllFacets.
Groups GroupByFacet(std::span<const std::vector<std::string>> items,
                    const FacetClassifier& classifier);

}  // namespace citescope

#endif  // CITESCOPE_GROUPING_H_
