// Copyright 2026 The agq Authors
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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "agq/gf.hpp"

namespace agq {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(FieldPtr field,
                          const std::vector<std::vector<Symbol>>& rows,
                          std::size_t cols);
  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Symbol> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Symbol> values);
  Matrix transpose() const;
  /// Entrywise map a -> a^q (requires a quadratic-extension field).
  Matrix conjugate() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

/// Reduced row echelon form. `basis` holds the nonzero rows only.
struct Echelon {
  Matrix basis;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis (as rows) of the right kernel {x : m * x^T = 0}.
Matrix null_space(const Matrix& m);

/// True when every row of `sub` lies in the row space of `m`.
bool row_space_contains(const Matrix& m, const Matrix& sub);
bool same_row_space(const Matrix& a, const Matrix& b);

/// v * m for a row vector v.
std::vector<Symbol> vec_mat(const Field& f, std::span<const Symbol> v, const Matrix& m);
/// m * v^T as a vector of length m.rows().
std::vector<Symbol> mat_vec(const Field& f, const Matrix& m, std::span<const Symbol> v);

std::size_t hamming_weight(std::span<const Symbol> v);

}  // namespace agq
