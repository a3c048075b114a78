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

#include "citescope/grouping.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "citescope/errors.h"
#include "json.hpp"

namespace citescope {
namespace {

// Dense square matrix used while aggregating communities.
struct Matrix {
  std::size_t n = 0;
  std::vector<double> a;

  double& at(std::size_t u, std::size_t v) { return a[u * n + v]; }
  double at(std::size_t u, std::size_t v) const { return a[u * n + v]; }
};

Matrix FromGraph(const WeightedGraph& graph) {
  Matrix m{graph.num_nodes(), {}};
  m.a.reserve(m.n * m.n);
  for (std::size_t v = 0; v < m.n; ++v) {
    const auto row = graph.Row(v);
    m.a.insert(m.a.end(), row.begin(), row.end());
  }
  return m;
}

std::vector<double> Degrees(const Matrix& m) {
  std::vector<double> k(m.n, 0.0);
  for (std::size_t v = 0; v < m.n; ++v) {
    for (std::size_t w = 0; w < m.n; ++w) k[v] += m.at(v, w);
  }
  return k;
}

// Renumbers labels densely in order of first appearance; returns the count.
std::size_t Densify(std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::size_t> remap;
  for (auto& label : labels) {
    label = remap.try_emplace(label, remap.size()).first->second;
  }
  return remap.size();
}

// Moves single nodes between communities while modularity improves.
// `community` holds ids < m.n. Returns whether any node moved.
bool LocalMoving(const Matrix& m, std::vector<std::size_t>& community,
                 const LouvainOptions& options, std::mt19937_64& rng) {
  const std::size_t n = m.n;
  const std::vector<double> k = Degrees(m);
  const double two_m = std::accumulate(k.begin(), k.end(), 0.0);

  std::vector<double> tot(n, 0.0);
  std::vector<std::size_t> size(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    tot[community[v]] += k[v];
    ++size[community[v]];
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (options.shuffle_order) {
    for (std::size_t i = n; i > 1; --i) {
      std::swap(order[i - 1], order[rng() % i]);
    }
  }

  std::vector<double> link(n, 0.0);
  std::vector<std::size_t> touched;
  bool any_move = false;
  bool improved = true;
  while (improved) {
    improved = false;
    for (const std::size_t v : order) {
      const std::size_t old = community[v];
      touched.clear();
      for (std::size_t w = 0; w < n; ++w) {
        if (w == v || m.at(v, w) == 0.0) continue;
        const std::size_t c = community[w];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += m.at(v, w);
      }
      tot[old] -= k[v];
      --size[old];

      // Gain of inserting v into c, up to the constant factor 2 / 2m.
      auto gain = [&](std::size_t c) {
        return link[c] - tot[c] * k[v] / two_m;
      };
      std::size_t best = old;
      double best_gain = gain(old);
      std::sort(touched.begin(), touched.end());
      for (const std::size_t c : touched) {
        if (c == old) continue;
        const double g = gain(c);
        if (g > best_gain + options.min_gain) {
          best = c;
          best_gain = g;
        }
      }
      // Moving v into an empty community has gain 0.
      if (size[old] > 0 && 0.0 > best_gain + options.min_gain) {
        best = static_cast<std::size_t>(std::find(size.begin(), size.end(), 0) -
                                        size.begin());
      }

      tot[best] += k[v];
      ++size[best];
      community[v] = best;
      if (best != old) {
        improved = true;
        any_move = true;
      }
      for (const std::size_t c : touched) link[c] = 0.0;
    }
  }
  return any_move;
}

// Collapses each community into a node; the self-loop of a super-node holds
// the sum of A_uv over ordered member pairs, so degrees and 2m carry over.
Matrix Aggregate(const Matrix& m, const std::vector<std::size_t>& community,
                 std::size_t count) {
  Matrix out{count, std::vector<double>(count * count, 0.0)};
  for (std::size_t u = 0; u < m.n; ++u) {
    for (std::size_t v = 0; v < m.n; ++v) {
      out.at(community[u], community[v]) += m.at(u, v);
    }
  }
  return out;
}

// Hierarchical passes starting from `membership` (labels of original nodes).
std::vector<std::size_t> Multilevel(const Matrix& base,
                                    std::vector<std::size_t> membership,
                                    const LouvainOptions& options,
                                    std::mt19937_64& rng) {
  std::size_t count = Densify(membership);
  Matrix level = Aggregate(base, membership, count);
  while (true) {
    std::vector<std::size_t> community(level.n);
    std::iota(community.begin(), community.end(), 0);
    if (!LocalMoving(level, community, options, rng)) break;
    const std::size_t next = Densify(community);
    for (auto& label : membership) label = community[label];
    level = Aggregate(level, community, next);
    count = next;
    if (count == 1) break;
  }
  Densify(membership);
  return membership;
}

std::vector<std::pair<std::size_t, double>> NormalizedFeatures(
    std::map<std::size_t, double> values) {
  double sum = 0.0;
  for (const auto& [index, value] : values) sum += value * value;
  std::vector<std::pair<std::size_t, double>> out;
  if (sum == 0.0) return out;
  const double norm = std::sqrt(sum);
  out.reserve(values.size());
  for (const auto& [index, value] : values)
    out.emplace_back(index, value / norm);
  return out;
}

constexpr double kUntrained = -std::numeric_limits<double>::infinity();

}  // namespace

WeightedGraph::WeightedGraph(std::size_t num_nodes)
    : n_(num_nodes), adjacency_(num_nodes * num_nodes, 0.0) {}

void WeightedGraph::SetEdge(std::size_t u, std::size_t v, double weight) {
  if (u >= n_ || v >= n_) throw InvalidArgument("edge endpoint out of range");
  if (!(weight >= 0.0)) throw InvalidArgument("edge weight must be >= 0");
  adjacency_[u * n_ + v] = weight;
  adjacency_[v * n_ + u] = weight;
}

double WeightedGraph::Degree(std::size_t v) const {
  double sum = 0.0;
  for (const double w : Row(v)) sum += w;
  return sum;
}

double WeightedGraph::TotalWeightTwice() const {
  double sum = 0.0;
  for (std::size_t v = 0; v < n_; ++v) sum += Degree(v);
  return sum;
}

std::size_t WeightedGraph::EdgeCount() const {
  std::size_t count = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u; v < n_; ++v) {
      if (Weight(u, v) > 0.0) ++count;
    }
  }
  return count;
}

WeightedGraph BuildSimilarityGraph(std::span<const SparseVector> vectors,
                                   double min_edge) {
  WeightedGraph graph(vectors.size());
  for (std::size_t u = 0; u < vectors.size(); ++u) {
    for (std::size_t v = u + 1; v < vectors.size(); ++v) {
      const double similarity = Cosine(vectors[u], vectors[v]);
      if (similarity > 0.0 && similarity >= min_edge) {
        graph.SetEdge(u, v, similarity);
      }
    }
  }
  return graph;
}

Partition::Partition(std::vector<std::size_t> assignment)
    : assignment_(std::move(assignment)) {
  num_communities_ = Densify(assignment_);
}

Partition Partition::Singletons(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return Partition(std::move(labels));
}

Partition Partition::AllInOne(std::size_t n) {
  return Partition(std::vector<std::size_t>(n, 0));
}

std::vector<std::vector<std::size_t>> Partition::Members() const {
  std::vector<std::vector<std::size_t>> members(num_communities_);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    members[assignment_[v]].push_back(v);
  }
  return members;
}

double Modularity(const WeightedGraph& graph, const Partition& partition) {
  const std::size_t n = graph.num_nodes();
  if (partition.num_nodes() != n) {
    throw InvalidArgument("partition size does not match graph");
  }
  // Q = sum_c [in_c / 2m - (tot_c / 2m)^2], with in_c summed row by row in
  // the same order as the degrees so a single community gives exactly 0.
  std::vector<double> in(partition.num_communities(), 0.0);
  std::vector<double> tot(partition.num_communities(), 0.0);
  double two_m = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t c = partition.community(v);
    const auto row = graph.Row(v);
    double degree = 0.0;
    double inside = 0.0;
    for (std::size_t w = 0; w < n; ++w) {
      degree += row[w];
      if (partition.community(w) == c) inside += row[w];
    }
    in[c] += inside;
    tot[c] += degree;
    two_m += degree;
  }
  if (!(two_m > 0.0)) throw EmptyGraph("modularity of a graph without edges");
  double q = 0.0;
  for (std::size_t c = 0; c < in.size(); ++c) {
    const double share = tot[c] / two_m;
    q += in[c] / two_m - share * share;
  }
  return q;
}

Partition LouvainCommunities(const WeightedGraph& graph,
                             const LouvainOptions& options) {
  if (!(graph.TotalWeightTwice() > 0.0)) {
    throw EmptyGraph("community detection on a graph without edges");
  }
  std::mt19937_64 rng(options.seed);
  const Matrix base = FromGraph(graph);
  std::vector<std::size_t> membership(base.n);
  std::iota(membership.begin(), membership.end(), 0);
  while (true) {
    membership = Multilevel(base, std::move(membership), options, rng);
    // Refine on the original nodes; aggregation can leave single-node moves
    // with positive gain.
    if (!LocalMoving(base, membership, options, rng)) break;
  }
  return Partition(std::move(membership));
}

FacetClassifier FacetClassifier::Train(std::span<const LabeledSpan> data,
                                       const IdfTable& idf,
                                       const WordSet& verbs,
                                       const FacetTrainOptions& options) {
  std::vector<bool> present(kAllFacets.size(), false);
  for (const auto& span : data)
    present[static_cast<std::size_t>(span.facet)] = true;
  FacetClassifier model;
  for (const Facet facet : kAllFacets) {
    if (present[static_cast<std::size_t>(facet)])
      model.trained_.push_back(facet);
  }
  if (model.trained_.size() < 2) {
    throw DegenerateData("facet training needs at least two distinct facets");
  }

  std::map<std::string, std::size_t> df;
  for (const auto& span : data) {
    for (const auto& token : span.tokens) {
      model.features_.emplace(token, 0);
      if (IsVerb(token, verbs)) {
        model.features_.emplace("verb:" + token, 0);
        model.verbs_.insert(token);
      }
      df.emplace(token, idf.DocFrequency(token));
    }
  }
  std::size_t index = 0;
  for (auto& [feature, slot] : model.features_) slot = index++;
  model.idf_ = IdfTable::FromCounts(idf.doc_count(), std::move(df));

  const std::size_t num_features = model.features_.size();
  std::vector<std::vector<std::pair<std::size_t, double>>> examples;
  examples.reserve(data.size());
  for (const auto& span : data) examples.push_back(model.Features(span.tokens));

  // w_f = scale_f * v_f keeps the per-step weight decay O(1).
  const std::size_t num_facets = kAllFacets.size();
  std::vector<std::vector<double>> v(num_facets,
                                     std::vector<double>(num_features, 0.0));
  std::vector<double> scale(num_facets, 1.0);
  std::vector<double> bias(num_facets, 0.0);

  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);
  std::size_t step = 0;
  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng() % i]);
    }
    for (const std::size_t i : order) {
      const double eta = options.learning_rate /
                         (1.0 + options.learning_rate * options.lambda *
                                    static_cast<double>(step++));
      for (const Facet facet : model.trained_) {
        const auto f = static_cast<std::size_t>(facet);
        const double y = data[i].facet == facet ? 1.0 : -1.0;
        double score = bias[f];
        for (const auto& [feature, value] : examples[i]) {
          score += scale[f] * v[f][feature] * value;
        }
        scale[f] *= 1.0 - eta * options.lambda;
        const double margin = y * score;
        if (margin < 1.0) {
          // Subgradient of the squared hinge (1 - margin)^2.
          const double g = 2.0 * (1.0 - margin) * y;
          for (const auto& [feature, value] : examples[i]) {
            v[f][feature] += eta * g * value / scale[f];
          }
          bias[f] += eta * g;
        }
        if (scale[f] < 1e-9) {
          for (double& w : v[f]) w *= scale[f];
          scale[f] = 1.0;
        }
      }
    }
  }

  model.weights_.assign(num_facets, std::vector<double>(num_features, 0.0));
  model.bias_.assign(num_facets, kUntrained);
  for (const Facet facet : model.trained_) {
    const auto f = static_cast<std::size_t>(facet);
    for (std::size_t j = 0; j < num_features; ++j) {
      model.weights_[f][j] = scale[f] * v[f][j];
    }
    model.bias_[f] = bias[f];
  }
  return model;
}

std::vector<std::pair<std::size_t, double>> FacetClassifier::Features(
    std::span<const std::string> tokens) const {
  std::map<std::string_view, std::size_t> tf;
  for (const auto& token : tokens) ++tf[token];
  std::map<std::size_t, double> values;
  for (const auto& [token, count] : tf) {
    // Raw tf: with unit L2 normalization, repeating a span leaves its
    // features unchanged.
    const double weight = static_cast<double>(count) * idf_.Idf(token);
    if (const auto it = features_.find(token); it != features_.end()) {
      values[it->second] += weight;
    }
    if (verbs_.contains(std::string(token))) {
      const auto it = features_.find("verb:" + std::string(token));
      if (it != features_.end()) values[it->second] += weight;
    }
  }
  return NormalizedFeatures(std::move(values));
}

std::vector<double> FacetClassifier::DecisionValues(
    std::span<const std::string> tokens) const {
  const auto x = Features(tokens);
  std::vector<double> values(kAllFacets.size(), kUntrained);
  for (const Facet facet : trained_) {
    const auto f = static_cast<std::size_t>(facet);
    double score = bias_[f];
    for (const auto& [feature, value] : x)
      score += weights_[f][feature] * value;
    values[f] = score;
  }
  return values;
}

Facet FacetClassifier::Classify(std::span<const std::string> tokens) const {
  const auto values = DecisionValues(tokens);
  // max_element returns the first maximum, i.e. the earliest facet.
  const auto best = std::max_element(values.begin(), values.end());
  return kAllFacets[static_cast<std::size_t>(best - values.begin())];
}

std::string FacetClassifier::ToJson() const {
  nlohmann::ordered_json root;
  std::vector<std::string> names(features_.size());
  for (const auto& [feature, index] : features_) names[index] = feature;
  root["features"] = names;
  nlohmann::ordered_json facets = nlohmann::ordered_json::object();
  for (const Facet facet : trained_) {
    const auto f = static_cast<std::size_t>(facet);
    nlohmann::ordered_json node;
    node["bias"] = bias_[f];
    nlohmann::ordered_json weights = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (weights_[f][j] != 0.0) weights[names[j]] = weights_[f][j];
    }
    node["weights"] = std::move(weights);
    facets[std::string(FacetName(facet))] = std::move(node);
  }
  root["facets"] = std::move(facets);
  nlohmann::ordered_json idf;
  idf["doc_count"] = idf_.doc_count();
  nlohmann::ordered_json df = nlohmann::ordered_json::object();
  for (const auto& [term, count] : idf_.df()) df[term] = count;
  idf["df"] = std::move(df);
  root["idf"] = std::move(idf);
  std::vector<std::string> verbs(verbs_.begin(), verbs_.end());
  std::sort(verbs.begin(), verbs.end());
  root["verbs"] = verbs;
  return root.dump(2) + "\n";
}

FacetClassifier FacetClassifier::FromJson(std::string_view json_text) {
  FacetClassifier model;
  try {
    const auto root = nlohmann::json::parse(json_text);
    const auto names = root.at("features").get<std::vector<std::string>>();
    for (std::size_t j = 0; j < names.size(); ++j)
      model.features_[names[j]] = j;
    model.weights_.assign(kAllFacets.size(),
                          std::vector<double>(names.size(), 0.0));
    model.bias_.assign(kAllFacets.size(), kUntrained);
    for (const Facet facet : kAllFacets) {
      const auto it = root.at("facets").find(std::string(FacetName(facet)));
      if (it == root.at("facets").end()) continue;
      const auto f = static_cast<std::size_t>(facet);
      model.trained_.push_back(facet);
      model.bias_[f] = it->at("bias").get<double>();
      for (const auto& [feature, weight] : it->at("weights").items()) {
        const auto slot = model.features_.find(feature);
        if (slot == model.features_.end()) {
          throw InvalidArgument("model weight for unknown feature " + feature);
        }
        model.weights_[f][slot->second] = weight.get<double>();
      }
    }
    std::map<std::string, std::size_t> df;
    for (const auto& [term, count] : root.at("idf").at("df").items()) {
      df[term] = count.get<std::size_t>();
    }
    model.idf_ = IdfTable::FromCounts(
        root.at("idf").at("doc_count").get<std::size_t>(), std::move(df));
    for (const auto& verb : root.at("verbs")) {
      model.verbs_.insert(verb.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("invalid facet model: ") + e.what());
  }
  if (model.trained_.size() < 2) {
    throw InvalidArgument("facet model covers fewer than two facets");
  }
  return model;
}

Groups GroupByCommunity(std::span<const SparseVector> items, double min_edge,
                        const LouvainOptions& options) {
  Groups groups;
  if (items.empty()) return groups;
  const WeightedGraph graph = BuildSimilarityGraph(items, min_edge);
  const Partition partition = graph.TotalWeightTwice() > 0.0
                                  ? LouvainCommunities(graph, options)
                                  : Partition::Singletons(items.size());
  for (std::size_t v = 0; v < items.size(); ++v) {
    groups[partition.community(v)].push_back(v);
  }
  return groups;
}

Groups GroupByFacet(std::span<const std::vector<std::string>> items,
                    const FacetClassifier& classifier) {
  Groups groups;
  for (std::size_t i = 0; i < items.size(); ++i) {
    groups[static_cast<std::size_t>(classifier.Classify(items[i]))].push_back(
        i);
  }
  return groups;
}

}  // namespace citescope
