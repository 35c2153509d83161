// Copyright 2026 The lovasz-approx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOVASZ_LINEAR_SOLVE_HPP
#define LOVASZ_LINEAR_SOLVE_HPP

#include <lovasz/rational.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace lovasz {

/// Row-major square or rectangular matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct singular_matrix_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solves m x = rhs by Gaussian elimination, pivoting on the entry of largest
/// magnitude in each column. Throws singular_matrix_error when no nonzero
/// pivot exists.
inline std::vector<Rational> solve_exact(RationalMatrix m,
                                         std::vector<Rational> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n)
    throw std::invalid_argument("solve_exact: dimension mismatch");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs(m(r, col)) > abs(m(pivot, col))) pivot = r;
    if (m(pivot, col) == 0)
      throw singular_matrix_error("singular system at column " +
                                  std::to_string(col));
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(col, j), m(pivot, j));
      std::swap(rhs[col], rhs[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
      rhs[r] -= factor * rhs[col];
    }
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m(i, j) * x[j];
    x[i] = acc / m(i, i);
  }
  return x;
}

/// Symmetric elimination without pivoting (LDL^T); a symmetric matrix is
/// positive definite iff every pivot is strictly positive.
inline bool is_positive_definite(RationalMatrix m) {
  if (!m.is_symmetric()) return false;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational factor = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return true;
}

}  // namespace lovasz

#endif  // LOVASZ_LINEAR_SOLVE_HPP
