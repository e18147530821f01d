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
 * @file pencil.hpp
 * @brief Quadratic forms, pencils of quadrics, Pfaffian forms, singular
 * members and the normal form
 *
 *     f = sum_i a_i x_i y_i,   g = sum_i b_i x_i y_i + x_i^2 + y_i^2.
 *
 * Variables are indexed 0 .. 2M+1; in normal-form coordinates x_i is
 * variable i and y_i is variable M+1+i.
 *
 * Points of P^1 attached to a pencil are written in the coordinates of the
 * map [f : g]: the member h = a g + b f is singular exactly when [a : b] is
 * such a point. The Pfaffian form Pf(s f + t g) = prod (a_i s + b_i t)
 * vanishes at the swapped points [b_i : a_i].
 */

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "c2pencil/exactla.hpp"
#include "c2pencil/poly.hpp"

namespace c2pencil {

class QuadraticForm {
 public:
  QuadraticForm(const FieldSpec& field, std::size_t n);

  struct Term {
    std::size_t i;
    std::size_t j;
    FieldElement c;
  };

  const FieldSpec& field() const noexcept { return *field_; }
  std::size_t n() const noexcept { return n_; }

  /// Coefficient of v_i v_j; argument order does not matter.
  FieldElement coeff(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const FieldElement& c);
  void add(std::size_t i, std::size_t j, const FieldElement& c);

  /// Nonzero terms with i <= j in lexicographic order.
  std::vector<Term> terms() const;

  FieldElement operator()(const Vector& x) const;
  QuadraticForm operator+(const QuadraticForm& o) const;
  QuadraticForm operator*(const FieldElement& c) const;
  bool operator==(const QuadraticForm& o) const;
  bool operator!=(const QuadraticForm& o) const { return !(*this == o); }
  bool is_zero() const noexcept;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  const FieldSpec* field_;
  std::size_t n_;
  std::vector<FieldElement> coeffs_;  // n x n, only i <= j used
};

/// A_q(u, v) = q(u + v) + q(u) + q(v) as an alternating matrix.
Matrix polar_form(const QuadraticForm& q);

/// q o S, i.e. (q o S)(x) = q(S x).
QuadraticForm substitute(const QuadraticForm& q, const Matrix& s);

QuadraticForm embed(const Embedding& e, const QuadraticForm& q);

class Pencil {
 public:
  /// Requires equal, even variable counts (at least 4) and linearly
  /// independent f, g.
  Pencil(QuadraticForm f, QuadraticForm g);

  const QuadraticForm& f() const noexcept { return f_; }
  const QuadraticForm& g() const noexcept { return g_; }
  const FieldSpec& field() const noexcept { return f_.field(); }
  std::size_t n() const noexcept { return f_.n(); }
  std::size_t M() const noexcept { return f_.n() / 2 - 1; }

  /// s f + t g.
  QuadraticForm member(const FieldElement& s, const FieldElement& t) const;

 private:
  QuadraticForm f_;
  QuadraticForm g_;
};

Pencil embed(const Embedding& e, const Pencil& p);

/// Pf(s A_f + t A_g), a binary form of degree M+1.
BinaryForm pfaffian_form(const Pencil& p);

/// Points [a : b] whose member a g + b f is singular, with multiplicities.
BinaryFormRoots pfaffian_points(const Pencil& p);

struct SingularMember {
  P1Point point;
  FieldElement a;  // representative of the point used for the member
  FieldElement b;
  QuadraticForm member;        // a g + b f
  std::array<Vector, 2> plane;  // basis of the kernel of its polar form
};

/// One component of the singular locus of the fibration, in normal-form
/// coordinates: every pair except pair `index` vanishes, and the remaining
/// plane carries the doubled line (x_i + y_i)^2.
struct LocusComponent {
  std::size_t index;
  std::size_t x_var;
  std::size_t y_var;
  std::string equations;
};

struct SingularLocusReport {
  Embedding extension;  // input field -> field of the report
  std::vector<SingularMember> members;
  std::vector<LocusComponent> components;  // only filled from a normal form
};

class PencilNormalForm {
 public:
  using Pair = std::pair<FieldElement, FieldElement>;

  /// Normal form with the given pairs, kept in the given order. Requires
  /// M >= 1, a_i != 0 and pairwise distinct points [a_i : b_i].
  static PencilNormalForm from_pairs(const FieldSpec& field, std::vector<Pair> pairs);

  const FieldSpec& field() const noexcept { return *field_; }
  std::size_t M() const noexcept { return pairs_.size() - 1; }
  std::size_t n() const noexcept { return 2 * pairs_.size(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  const FieldElement& a(std::size_t i) const { return pairs_.at(i).first; }
  const FieldElement& b(std::size_t i) const { return pairs_.at(i).second; }
  std::size_t x_var(std::size_t i) const noexcept { return i; }
  std::size_t y_var(std::size_t i) const noexcept { return M() + 1 + i; }

  /// Coordinate change: substitute(input_f, P), substitute(input_g, P)
  /// combined through B give f() and g().
  const Matrix& P() const noexcept { return p_; }
  /// [f(); g()] = B [input_f o P; input_g o P].
  const Matrix& B() const noexcept { return b_; }
  /// Input field -> field() (identity when no extension was needed).
  const Embedding& extension() const noexcept { return extension_; }

  QuadraticForm f() const;
  QuadraticForm g() const;
  Pencil pencil() const;
  std::vector<P1Point> points() const;

  /// The same normal form over a larger field; pair order is preserved.
  PencilNormalForm embedded(const Embedding& e) const;

 private:
  friend PencilNormalForm normalize_pencil(const Pencil& p, bool allow_extend);
  PencilNormalForm(const FieldSpec& field, std::vector<Pair> pairs, Matrix p, Matrix b, Embedding ext);

  const FieldSpec* field_;
  std::vector<Pair> pairs_;
  Matrix p_;
  Matrix b_;
  Embedding extension_;
};

/// For a basis change [f'; g'] = G [f; g], the point of the new pencil that
/// corresponds to the point `pt` of the old one.
P1Point point_after_basis_change(const Matrix& g, const P1Point& pt);

/// Singular members of the pencil and the kernel planes of their polar forms.
/// Throws RepeatedPfaffianRoots, or FieldTooSmall when the Pfaffian does not
/// split and extension is not allowed.
SingularLocusReport singular_members(const Pencil& p, bool allow_extend = false);

/// Reduces the pencil to normal form. The new first basis member is
/// f + lambda g for the smallest-encoding lambda (then g itself) that is
/// nonsingular and has isotropic vectors on every kernel plane; B records
/// the choice. Throws RepeatedPfaffianRoots,
/// NotSmooth, or FieldTooSmall (with the required extension degree over the
/// input field) when extension is not allowed.
PencilNormalForm normalize_pencil(const Pencil& p, bool allow_extend = false);

/// Components of the singular locus and their image points.
SingularLocusReport singular_locus(const PencilNormalForm& nf);

}  // namespace c2pencil
