/*
 * Copyright 2026 The c2pencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "c2pencil/exactla.hpp"

#include <utility>

namespace c2pencil {

namespace {

void require_field(const FieldSpec& a, const FieldSpec& b) {
  if (&a != &b) throw Error(ErrorKind::FieldMismatch, "matrices over " + a.str() + " and " + b.str());
}

}  // namespace

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(field)) {}

Matrix::Matrix(const FieldSpec& field, const std::vector<Vector>& rows)
    : field_(&field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidInput, "ragged matrix rows");
    for (const auto& x : r) {
      require_field(field, x.field());
      data_.push_back(x);
    }
  }
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_field(*field_, *o.field_);
  if (cols_ != o.rows_) throw Error(ErrorKind::InvalidInput, "matrix product dimension mismatch");
  Matrix out(*field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidInput, "matrix-vector dimension mismatch");
  Vector out = zero_vector(*field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_field(*field_, *o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::InvalidInput, "matrix sum dimension mismatch");
  Matrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

Matrix Matrix::operator*(const FieldElement& c) const {
  Matrix out(*this);
  for (auto& x : out.data_) x *= c;
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
  Matrix out(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool Matrix::is_zero() const noexcept {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_alternating() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Echelon row_reduce(const Matrix& m) {
  Matrix a(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const FieldElement inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const FieldElement factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) += factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldElement det(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  Matrix a(m);
  const std::size_t n = a.rows();
  FieldElement result = FieldElement::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return FieldElement::zero(m.field());
    // Row swaps flip no sign in characteristic 2.
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(c, j));
    }
    result *= a(c, c);
    const FieldElement inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const FieldElement factor = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) += factor * a(c, j);
    }
  }
  return result;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidInput, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElement::one(m.field());
  }
  const Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw Error(ErrorKind::DivisionByZero, "matrix is singular");
  }
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
  }
  return out;
}

namespace {

// Row and column operation  r <- r + c * s  on a symmetric matrix.
void add_multiple_congruent(Matrix& a, std::size_t r, std::size_t s, const FieldElement& c) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) a(r, i) += c * a(s, i);
  for (std::size_t i = 0; i < n; ++i) a(i, r) += c * a(i, s);
}

void swap_congruent(Matrix& a, std::size_t r, std::size_t s) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) std::swap(a(r, i), a(s, i));
  for (std::size_t i = 0; i < n; ++i) std::swap(a(i, r), a(i, s));
}

}  // namespace

FieldElement pfaffian(const Matrix& a) {
  if (!a.is_square() || a.rows() % 2 != 0) {
    throw Error(ErrorKind::InvalidInput, "Pfaffian needs an even-dimensional square matrix");
  }
  if (!a.is_alternating()) throw Error(ErrorKind::InvalidInput, "Pfaffian of a non-alternating matrix");
  Matrix w(a);
  const std::size_t n = w.rows();
  FieldElement result = FieldElement::one(a.field());
  // Every step is a congruence by a determinant-one transform, so the
  // Pfaffian is the product of the 2x2 pivots.
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t j = k + 1;
    while (j < n && w(k, j).is_zero()) ++j;
    if (j == n) return FieldElement::zero(a.field());
    if (j != k + 1) swap_congruent(w, j, k + 1);
    const FieldElement pivot = w(k, k + 1);
    const FieldElement pivot_inv = pivot.inverse();
    for (std::size_t r = k + 2; r < n; ++r) {
      if (!w(k, r).is_zero()) add_multiple_congruent(w, r, k + 1, w(k, r) * pivot_inv);
    }
    for (std::size_t r = k + 2; r < n; ++r) {
      if (!w(k + 1, r).is_zero()) add_multiple_congruent(w, r, k, w(k + 1, r) * pivot_inv);
    }
    result *= pivot;
  }
  return result;
}

Matrix congruence(const Matrix& s, const Matrix& a) {
  if (!a.is_square() || s.cols() != a.rows()) {
    throw Error(ErrorKind::InvalidInput, "congruence dimension mismatch");
  }
  return s * a * s.transpose();
}

Matrix embed(const Embedding& e, const Matrix& m) {
  require_field(e.from(), m.field());
  Matrix out(e.to(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = e(m(i, j));
  }
  return out;
}

Vector embed(const Embedding& e, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(e(x));
  return out;
}

Matrix pull_back(const Embedding& e, const Matrix& m) {
  require_field(e.to(), m.field());
  Matrix out(e.from(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto x = e.preimage(m(i, j));
      if (!x) throw Error(ErrorKind::VerificationFailure, "matrix entry outside the subfield");
      out(i, j) = *x;
    }
  }
  return out;
}

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, FieldElement::zero(field)); }

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t k) {
  Vector v = zero_vector(field, n);
  v.at(k) = FieldElement::one(field);
  return v;
}

FieldElement dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.empty()) throw Error(ErrorKind::InvalidInput, "dot product dimension mismatch");
  FieldElement acc = FieldElement::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

FieldElement pairing(const Matrix& a, const Vector& u, const Vector& v) { return dot(u, a * v); }

}  // namespace c2pencil
