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

#ifndef CITESCOPE_LINALG_H_
#define CITESCOPE_LINALG_H_

#include <cstddef>
#include <vector>

namespace citescope {

// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<double>& data() const { return data_; }

  double FrobeniusNorm() const;
  DenseMatrix Transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix Multiply(const DenseMatrix& a, const DenseMatrix& b);

// Thin SVD A = U diag(S) V^T of an m x n matrix.
struct LsaDecomposition {
  // n values, non-increasing, >= 0.
  std::vector<double> singular_values;
  // m x n; column j has unit norm when singular_values[j] > 0, else zero.
  DenseMatrix u;
  // n x n with orthonormal rows. The largest-magnitude entry of each row is
  // positive.
  DenseMatrix vt;

  DenseMatrix Reconstruct() const;
};

// One-sided (Hestenes) Jacobi: column rotations orthogonalize A, which
// diagonalizes A^T A. Throws InvalidArgument on an empty matrix.
LsaDecomposition Svd(const DenseMatrix& matrix);

}  // namespace citescope

#endif  // CITESCOPE_LINALG_H_
