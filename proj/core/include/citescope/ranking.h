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

#ifndef CITESCOPE_RANKING_H_
#define CITESCOPE_RANKING_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "citescope/grouping.h"

namespace citescope {

struct CentralityOptions {
  // Weight of the uniform jump matrix.
  double damping = 0.1;
  double tolerance = 1e-8;
  std::size_t max_iterations = 1000;
  // Called with the iterate after every step.
  std::function<void(std::size_t, std::span<const double>)> observer;
};

struct CentralityScores {
  std::vector<double> score;
  std::size_t iterations = 0;
  double residual = 0.0;
};

// Stationary vector of A = d U + (1 - d) B via p <- A^T p, where B is the
// row-normalized similarity matrix with zero rows replaced by uniform rows.
// Starts from the uniform vector; stops when the L1 change is <= tolerance.
// Throws InvalidArgument for an empty graph or d outside [0, 1), and
// NoConvergence after max_iterations.
CentralityScores Centrality(const WeightedGraph& graph,
                            const CentralityOptions& options = {});

// The transition matrix A (row-major, n x n) used by `Centrality`.
std::vector<double> TransitionMatrix(const WeightedGraph& graph,
                                     double damping);

// Node indices by descending score, ties by ascending index.
std::vector<std::size_t> RankByScore(std::span<const double> scores);

}  // namespace citescope

#endif  // CITESCOPE_RANKING_H_
