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

#include "citescope/ranking.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "citescope/errors.h"

namespace citescope {

std::vector<double> TransitionMatrix(const WeightedGraph& graph,
                                     double damping) {
  const std::size_t n = graph.num_nodes();
  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> a(n * n);
  for (std::size_t v = 0; v < n; ++v) {
    const double row_sum = graph.Degree(v);
    for (std::size_t w = 0; w < n; ++w) {
      // Zero rows become uniform rows.
      const double b = row_sum > 0.0 ? graph.Weight(v, w) / row_sum : uniform;
      a[v * n + w] = damping * uniform + (1.0 - damping) * b;
    }
  }
  return a;
}

CentralityScores Centrality(const WeightedGraph& graph,
                            const CentralityOptions& options) {
  const std::size_t n = graph.num_nodes();
  if (n == 0) throw InvalidArgument("centrality of an empty graph");
  if (!(options.damping >= 0.0 && options.damping < 1.0)) {
    throw InvalidArgument("damping must lie in [0, 1)");
  }
  const std::vector<double> a = TransitionMatrix(graph, options.damping);

  CentralityScores result;
  std::vector<double> p(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  double residual = 0.0;
  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    // next = A^T p
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      const double mass = p[v];
      const double* row = a.data() + v * n;
      for (std::size_t w = 0; w < n; ++w) next[w] += row[w] * mass;
    }
    // A is row-stochastic, so this only removes rounding drift.
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& x : next) x /= total;

    residual = 0.0;
    for (std::size_t v = 0; v < n; ++v) residual += std::abs(next[v] - p[v]);
    p.swap(next);
    if (options.observer) options.observer(iter, p);
    if (residual <= options.tolerance) {
      result.score = std::move(p);
      result.iterations = iter;
      result.residual = residual;
      return result;
    }
  }
  throw NoConvergence(options.max_iterations, residual);
}

std::vector<std::size_t> RankByScore(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(
      order.begin(), order.end(),
      [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace citescope
