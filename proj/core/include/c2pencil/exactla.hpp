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

/**
 * @file exactla.hpp
 * @brief Dense exact linear algebra over GF(2^m).
 *
 * "Alternating" follows the characteristic-2 meaning: symmetric with zero
 * diagonal. Polar forms of quadratic forms are alternating.
 */

#pragma once

#include <vector>

#include "c2pencil/gf2m.hpp"

namespace c2pencil {

using Vector = std::vector<FieldElement>;

class Matrix {
 public:
  /// rows x cols zero matrix.
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  /// From row lists; all rows must have the same length and be nonempty.
  Matrix(const FieldSpec& field, const std::vector<Vector>& rows);

  static Matrix identity(const FieldSpec& field, std::size_t n);

  const FieldSpec& field() const noexcept { return *field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator*(const FieldElement& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  bool is_zero() const noexcept;
  bool is_alternating() const noexcept;

 private:
  const FieldSpec* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

/// Row-reduced echelon form and the pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}; its size is cols - rank.
std::vector<Vector> kernel(const Matrix& m);

FieldElement det(const Matrix& m);

/// Throws DivisionByZero when singular.
Matrix inverse(const Matrix& m);

/// Pfaffian of an alternating matrix of even size, by congruence elimination.
/// Throws InvalidInput for odd size or a matrix that is not alternating.
FieldElement pfaffian(const Matrix& a);

/// S A S^T.
Matrix congruence(const Matrix& s, const Matrix& a);

/// Entrywise image under a field embedding.
Matrix embed(const Embedding& e, const Matrix& m);
Vector embed(const Embedding& e, const Vector& v);

/// Entrywise preimage; throws VerificationFailure if an entry is outside the subfield.
Matrix pull_back(const Embedding& e, const Matrix& m);

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t k);
FieldElement dot(const Vector& a, const Vector& b);

/// Bilinear pairing u^T A v.
FieldElement pairing(const Matrix& a, const Vector& u, const Vector& v);

}  // namespace c2pencil
