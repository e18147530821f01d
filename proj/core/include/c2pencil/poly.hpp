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
 * @file poly.hpp
 * @brief Univariate polynomials and binary forms over GF(2^m), with root
 * finding, squarefree tests and splitting degrees.
 */

#pragma once

#include <vector>

#include "c2pencil/gf2m.hpp"

namespace c2pencil {

class UniPoly {
 public:
  explicit UniPoly(const FieldSpec& field) : field_(&field) {}
  /// Lowest degree first; trailing zeros are stripped.
  UniPoly(const FieldSpec& field, std::vector<FieldElement> coeffs);

  static UniPoly constant(const FieldElement& c);
  /// t - r (= t + r).
  static UniPoly linear_root(const FieldElement& r);
  static UniPoly monomial(const FieldElement& c, unsigned degree);

  const FieldSpec& field() const noexcept { return *field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  FieldElement coeff(unsigned j) const;
  FieldElement leading() const;

  FieldElement operator()(const FieldElement& x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const { return *this + o; }
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const FieldElement& c) const;
  bool operator==(const UniPoly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  UniPoly operator%(const UniPoly& m) const { return divmod(m).second; }
  UniPoly operator/(const UniPoly& m) const { return divmod(m).first; }

  UniPoly monic() const;
  UniPoly derivative() const;

 private:
  void trim();

  const FieldSpec* field_;
  std::vector<FieldElement> coeffs_;
};

/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);
/// base^e mod m.
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m);

struct Root {
  FieldElement value;
  unsigned multiplicity;
};

/// Roots of p lying in its field, sorted by encoding. Exhaustive scan for
/// fields of size <= 2^16, distinct/equal-degree factorization above that.
/// The unique polynomial of degree < xs.size() through the points (xs, ys);
/// xs must be distinct.
UniPoly interpolate(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys);

std::vector<Root> find_roots(const UniPoly& p);

/// Same result computed only by the factorization route (exposed for tests).
std::vector<Root> find_roots_by_factorization(const UniPoly& p);

/// Degrees of the irreducible factors of a squarefree polynomial, ascending,
/// with repetition.
std::vector<unsigned> distinct_degree_factor_degrees(const UniPoly& p);

/// Smallest d such that p splits into linear factors over GF(2^{m d}).
unsigned splitting_degree(const UniPoly& p);

/// A point of P^1 normalized so the first nonzero coordinate is 1.
struct P1Point {
  FieldElement s;
  FieldElement t;

  /// Normalizes; throws InvalidInput for (0, 0).
  static P1Point make(const FieldElement& s, const FieldElement& t);

  bool operator==(const P1Point& o) const { return s == o.s && t == o.t; }
  bool operator!=(const P1Point& o) const { return !(*this == o); }
  /// Bit-encoding order on (s, t).
  bool operator<(const P1Point& o) const {
    return s.bits() != o.s.bits() ? s.bits() < o.s.bits() : t.bits() < o.t.bits();
  }
  std::string str() const;
};

/// Homogeneous form of degree d in (s, t); coefficient j multiplies s^{d-j} t^j.
class BinaryForm {
 public:
  BinaryForm(const FieldSpec& field, unsigned degree);
  BinaryForm(const FieldSpec& field, std::vector<FieldElement> coeffs);

  /// a*s + b*t.
  static BinaryForm linear(const FieldElement& a, const FieldElement& b);

  const FieldSpec& field() const noexcept { return *field_; }
  unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;

  FieldElement operator()(const FieldElement& s, const FieldElement& t) const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator*(const FieldElement& c) const;
  BinaryForm operator+(const BinaryForm& o) const;
  bool operator==(const BinaryForm& o) const { return coeffs_ == o.coeffs_; }

  /// Equality up to a nonzero global scalar.
  bool equal_up_to_scalar(const BinaryForm& o) const;

  BinaryForm partial_s() const;
  BinaryForm partial_t() const;

  /// P(s, 1) as a polynomial in s.
  UniPoly dehomogenize() const;

 private:
  const FieldSpec* field_;
  std::vector<FieldElement> coeffs_;
};

struct P1Root {
  P1Point point;
  unsigned multiplicity;
};

struct BinaryFormRoots {
  std::vector<P1Root> roots;  // sorted by bit encoding of (s, t)
  bool split = false;         // multiplicities sum to the degree
};

/// Zeros of a nonzero binary form on P^1 over its field, including [1:0].
BinaryFormRoots binary_form_roots(const BinaryForm& form);

/// True iff the form has no repeated root over the algebraic closure.
bool squarefree_check(const BinaryForm& form);

/// Smallest d such that the form splits over GF(2^{m d}).
unsigned splitting_degree(const BinaryForm& form);

UniPoly embed(const Embedding& e, const UniPoly& p);
BinaryForm embed(const Embedding& e, const BinaryForm& p);
P1Point embed(const Embedding& e, const P1Point& p);

}  // namespace c2pencil
