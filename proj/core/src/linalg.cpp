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

#include "agq/linalg.hpp"

#include <algorithm>
#include <utility>

namespace agq {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Symbol>>& rows,
                         std::size_t cols) {
  Matrix m(std::move(field), 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Symbol> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (Symbol v : values) {
    if (v >= field_->size()) throw FieldError("matrix entry outside the field");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::conjugate() const {
  Matrix out = *this;
  for (auto& v : out.data_) v = field_->frobenius_q(v);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Symbol v) { return v == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix product across fields");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  const Field& f = *a.field_;
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Symbol s = a(i, k);
      if (s == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out(i, j) = f.add(out(i, j), f.mul(s, b(k, j)));
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

Echelon row_reduce(const Matrix& m) {
  Matrix a = m;
  const Field& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead) {
      auto r1 = a.row(piv), r2 = a.row(lead);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
    }
    const Symbol scale = f.inv(a(lead, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) = f.mul(a(lead, j), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const Symbol factor = f.neg(a(r, c));
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(r, j) = f.add(a(r, j), f.mul(factor, a(lead, j)));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix basis(m.field(), 0, m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) basis.append_row(a.row(r));
  return {std::move(basis), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Matrix null_space(const Matrix& m) {
  const Field& f = *m.field();
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  Matrix out(m.field(), 0, m.cols());
  std::vector<Symbol> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v[e.pivots[r]] = f.neg(e.basis(r, free));
    }
    out.append_row(v);
  }
  return out;
}

bool row_space_contains(const Matrix& m, const Matrix& sub) {
  if (sub.rows() == 0) return true;
  if (m.cols() != sub.cols()) return false;
  Matrix stacked = m;
  for (std::size_t r = 0; r < sub.rows(); ++r) stacked.append_row(sub.row(r));
  return rank(stacked) == rank(m);
}

bool same_row_space(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  const Echelon ea = row_reduce(a), eb = row_reduce(b);
  return ea.basis == eb.basis;
}

std::vector<Symbol> vec_mat(const Field& f, std::span<const Symbol> v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector length mismatch");
  std::vector<Symbol> out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    auto row = m.row(i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(v[i], row[j]));
  }
  return out;
}

std::vector<Symbol> mat_vec(const Field& f, const Matrix& m, std::span<const Symbol> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length mismatch");
  std::vector<Symbol> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    Symbol acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc = f.add(acc, f.mul(row[j], v[j]));
    out[i] = acc;
  }
  return out;
}

std::size_t hamming_weight(std::span<const Symbol> v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](Symbol s) { return s != 0; }));
}

}  // namespace agq
