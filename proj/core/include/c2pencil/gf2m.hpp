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
 * @file gf2m.hpp
 * @brief Exact arithmetic in GF(2^m) for 1 <= m <= 32.
 *
 * Elements are bitmasks: bit j is the coefficient of x^j in the polynomial
 * basis defined by the field's irreducible modulus. Field descriptors are
 * interned, so a FieldElement carries a plain pointer to a descriptor that
 * lives for the whole program. Two elements may only be combined when they
 * share the same descriptor.
 *
 * Text encodings:
 *   field spec   "F2^m/0x<modulus-hex>"   e.g. "F2^2/0x7" for GF(4)
 *   element      "0x<hex>"                e.g. "0x3" for x + 1
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c2pencil/error.hpp"

namespace c2pencil {

inline constexpr unsigned kMaxFieldDegree = 32;

/// Irreducibility over GF(2) of a polynomial given as a bitmask (degree <= 63).
bool is_irreducible_gf2(std::uint64_t poly);

class FieldSpec {
 public:
  /// Interned descriptor for GF(2^m) with the given modulus; validates that
  /// bit m is the leading bit and that the modulus is irreducible.
  static const FieldSpec& get(unsigned m, std::uint64_t modulus);

  /// The irreducible degree-m modulus with the smallest bit encoding.
  static const FieldSpec& canonical(unsigned m);

  /// Parses "F2^m/0x<hex>".
  static const FieldSpec& parse(std::string_view text);

  /// Skips the irreducibility check. Only the self-check fault injection uses
  /// this; arithmetic in such a "field" is not a field.
  static const FieldSpec& unchecked(unsigned m, std::uint64_t modulus);

  unsigned degree() const noexcept { return m_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << m_; }
  std::string str() const;

  // Raw operations on bitmasks. Inputs must be reduced (< size()).
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t square(std::uint64_t a) const noexcept { return mul(a, a); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t sqrt(std::uint64_t a) const noexcept;
  unsigned trace(std::uint64_t a) const noexcept;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  FieldSpec(unsigned m, std::uint64_t modulus);
  friend struct FieldRegistry;

  unsigned m_;
  std::uint64_t modulus_;
  std::uint64_t mask_;
};

class FieldElement {
 public:
  FieldElement(const FieldSpec& field, std::uint64_t bits);

  static FieldElement zero(const FieldSpec& field) { return FieldElement(field, 0); }
  static FieldElement one(const FieldSpec& field) { return FieldElement(field, 1); }

  const FieldSpec& field() const noexcept { return *field_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  bool is_one() const noexcept { return bits_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const { return *this + o; }
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  /// Same field and same bits. Comparing elements of different fields is a
  /// logic error and reports false.
  bool operator==(const FieldElement& o) const noexcept {
    return field_ == o.field_ && bits_ == o.bits_;
  }
  bool operator!=(const FieldElement& o) const noexcept { return !(*this == o); }

  FieldElement inverse() const;
  FieldElement square() const { return FieldElement(*field_, field_->square(bits_)); }
  FieldElement pow(std::uint64_t e) const { return FieldElement(*field_, field_->pow(bits_, e)); }
  /// Unique square root (Frobenius is bijective on GF(2^m)).
  FieldElement sqrt() const { return FieldElement(*field_, field_->sqrt(bits_)); }
  /// Absolute trace to GF(2).
  unsigned trace() const noexcept { return field_->trace(bits_); }

  std::string hex() const;

 private:
  void check_same(const FieldElement& o) const;

  const FieldSpec* field_;
  std::uint64_t bits_;
};

/// "0x<hex>" element literal; value must be < 2^m.
FieldElement parse_element(const FieldSpec& field, std::string_view text);
std::string to_hex(std::uint64_t bits);

/// Orders by bit encoding (used for canonical sorting).
inline bool bits_less(const FieldElement& a, const FieldElement& b) noexcept {
  return a.bits() < b.bits();
}

/// Multiplicative order of a nonzero element.
std::uint64_t multiplicative_order(const FieldElement& x);

/// Roots of T^2 + b T + c. Returns both roots (smaller encoding first; equal
/// when b = 0), or nullopt when the quadratic has no root in the field.
std::optional<std::pair<FieldElement, FieldElement>> solve_quadratic(const FieldElement& b,
                                                                     const FieldElement& c);

/// Injective ring map GF(2^m) -> GF(2^{m d}), stored as the images of the
/// polynomial basis x^0 .. x^{m-1}. The map is GF(2)-linear on bitmasks.
class Embedding {
 public:
  /// Identity embedding of a field into itself.
  explicit Embedding(const FieldSpec& field);
  Embedding(const FieldSpec& from, const FieldSpec& to, std::uint64_t generator_image);

  const FieldSpec& from() const noexcept { return *from_; }
  const FieldSpec& to() const noexcept { return *to_; }
  unsigned degree() const noexcept { return to_->degree() / from_->degree(); }
  bool is_identity() const noexcept { return from_ == to_; }
  std::uint64_t generator_image() const noexcept { return basis_.size() > 1 ? basis_[1] : 1; }

  FieldElement operator()(const FieldElement& x) const;
  /// Inverse image, when x lies in the subfield.
  std::optional<FieldElement> preimage(const FieldElement& x) const;
  /// this followed by `next`.
  Embedding then(const Embedding& next) const;

 private:
  const FieldSpec* from_;
  const FieldSpec* to_;
  std::vector<std::uint64_t> basis_;
};

/// GF(2^{m d}) with its canonical modulus and an embedding of `field` into it.
/// The embedding sends x to the root of the small modulus with the smallest
/// bit encoding.
Embedding extend_field(const FieldSpec& field, unsigned d);

/// Truncated dual-number ring GF(2^m)[eps]/(eps^n).
class TruncatedElement {
 public:
  TruncatedElement(const FieldSpec& field, unsigned n);
  TruncatedElement(std::vector<FieldElement> coeffs);

  static TruncatedElement constant(const FieldElement& c, unsigned n);

  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size()); }
  const FieldSpec& field() const noexcept { return coeffs_.front().field(); }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  const FieldElement& operator[](unsigned j) const { return coeffs_.at(j); }

  bool is_zero() const noexcept;
  bool is_unit() const noexcept { return !coeffs_.front().is_zero(); }

  TruncatedElement operator+(const TruncatedElement& o) const;
  TruncatedElement operator-(const TruncatedElement& o) const { return *this + o; }
  TruncatedElement operator*(const TruncatedElement& o) const;
  TruncatedElement& operator+=(const TruncatedElement& o) { return *this = *this + o; }
  TruncatedElement& operator*=(const TruncatedElement& o) { return *this = *this * o; }
  bool operator==(const TruncatedElement& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const TruncatedElement& o) const { return !(*this == o); }

  TruncatedElement inverse() const;

 private:
  std::vector<FieldElement> coeffs_;
};

}  // namespace c2pencil
