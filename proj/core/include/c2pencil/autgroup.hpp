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
 * @file autgroup.hpp
 * @brief Automorphisms of the intersection X = V(f, g) of a normal-form
 * pencil: the infinitesimal part (tangent space, truncated point counts)
 * and the component group (kernel swaps, stabilizer of the singular points
 * in PGL_2, lifting criterion, constructed lifts, exhaustive oracle).
 *
 * An automorphism is carried as a matrix S in GL_{2M+2} acting by
 * substitution q -> q o S, with the block shape
 *
 *     x_{tau(j)} -> alpha_j x_j + beta_j y_j,
 *     y_{tau(j)} -> beta_j x_j + alpha_j y_j.
 *
 * Its pushforward is the 2x2 matrix A with f o S = A00 f + A01 g and
 * g o S = A10 f + A11 g; then A (a_j, b_j)^T = lambda_j (a_tau(j), b_tau(j))^T
 * with lambda_j = (alpha_j + beta_j)^2, and pushforward(S T) =
 * pushforward(S) pushforward(T). Matrices are compared modulo scalars via
 * their canonical scaling (first nonzero entry in row-major order is 1).
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c2pencil/pencil.hpp"

namespace c2pencil {

/// Scales so that the first nonzero entry (row-major) is 1.
Matrix canonical_scaling(const Matrix& m);
bool equal_mod_scalars(const Matrix& a, const Matrix& b);

class PGL2Elem {
 public:
  /// Throws InvalidInput unless m is an invertible 2x2 matrix.
  explicit PGL2Elem(Matrix m);
  static PGL2Elem identity(const FieldSpec& field);

  const FieldSpec& field() const noexcept { return m_.field(); }
  /// The representative as given.
  const Matrix& matrix() const noexcept { return m_; }
  Matrix canonical() const { return canonical_scaling(m_); }

  P1Point apply(const P1Point& p) const;
  PGL2Elem operator*(const PGL2Elem& o) const { return PGL2Elem(m_ * o.m_); }
  PGL2Elem inverse() const;
  bool is_identity() const;

  /// Equality modulo scalars.
  bool operator==(const PGL2Elem& o) const { return canonical() == o.canonical(); }
  bool operator!=(const PGL2Elem& o) const { return !(*this == o); }

 private:
  Matrix m_;
};

/// tau and lambda of a stabilizer element against the normal-form pairs,
/// together with the representative and its determinant.
struct LiftData {
  Matrix representative;
  std::vector<std::size_t> tau;
  std::vector<FieldElement> lambdas;
  FieldElement det;
};

struct AutRep {
  Matrix S;
  std::vector<std::size_t> tau;
  std::vector<std::pair<FieldElement, FieldElement>> coeffs;  // (alpha_j, beta_j)
  PGL2Elem pushforward;
};

enum class LiftStatus { Pass, FailsDeterminant, FailsPairProduct };

const char* to_string(LiftStatus s);

/// Outcome of the lifting criterion. On a determinant failure, `i` is the
/// first offending index, `value` is det A and `required` is
/// a_tau(i) lambda_i^2 / a_i. On a pair-product failure, `j` is the column,
/// `i` and `k` are two indices with different values `value` and `required`.
struct LiftVerdict {
  LiftStatus status = LiftStatus::Pass;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::optional<FieldElement> value;
  std::optional<FieldElement> required;

  bool passes() const noexcept { return status == LiftStatus::Pass; }
  std::string describe() const;
};

/// The block-shaped matrix for the given permutation and coefficients.
Matrix block_matrix(std::size_t M, const std::vector<std::size_t>& tau,
                    const std::vector<std::pair<FieldElement, FieldElement>>& coeffs);

/// Coefficients (c, d) with q = c f + d g, if q lies in the span.
std::optional<std::pair<FieldElement, FieldElement>> decompose_in_pencil(const QuadraticForm& q,
                                                                         const QuadraticForm& f,
                                                                         const QuadraticForm& g);

/// The pushforward of S, or nullopt if S does not preserve the pencil.
std::optional<PGL2Elem> try_pushforward(const Matrix& s, const PencilNormalForm& nf);

/// Throws InvalidInput if S does not preserve the pencil.
PGL2Elem pushforward(const AutRep& ar, const PencilNormalForm& nf);

/// Reads tau and the (alpha, beta) blocks off a block-shaped S that preserves
/// the pencil; throws InvalidInput otherwise.
AutRep make_autrep(const Matrix& s, const PencilNormalForm& nf);

/// The M+1 involutions x_i <-> y_i.
std::vector<AutRep> kernel_generators(const PencilNormalForm& nf);

struct TangentSpace {
  std::vector<Matrix> basis;        // D components
  std::vector<FieldElement> gamma;  // matching scalar components
  bool block_scalar = true;         // every D is diag(t_i I_2) on the pairs
  bool gamma_zero = true;

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Solutions (D, gamma) of A_f(x, D x) = gamma f(x), A_g(x, D x) = gamma g(x).
TangentSpace tangent_space(const PencilNormalForm& nf);

/// Number of automorphisms with entries in K[eps]/(eps^n) that reduce to the
/// identity mod eps, counted modulo unit scalars. K is the subfield of
/// nf.field() of degree `coefficient_degree` (0 selects the whole field).
/// Throws BudgetExceeded when the candidate count exceeds `budget`.
std::uint64_t aut0_count_truncated(const PencilNormalForm& nf, unsigned n, std::uint64_t budget,
                                   unsigned coefficient_degree = 0);

/// Candidate count aut0_count_truncated would enumerate (saturating).
std::uint64_t aut0_candidate_count(const PencilNormalForm& nf, unsigned n, unsigned coefficient_degree = 0);

/// All elements of PGL_2 over the points' field that permute the set.
std::vector<PGL2Elem> p1_set_stabilizer(const std::vector<P1Point>& points);

/// tau, lambda and det from the canonical representative of A.
LiftData lift_scalars(const PGL2Elem& a, const PencilNormalForm& nf);
/// Same, from the given representative (no rescaling).
LiftData lift_scalars(const Matrix& a, const PencilNormalForm& nf);

LiftVerdict lift_check(const LiftData& ld, const PencilNormalForm& nf);

/// Builds the lift of a passing element. Throws FieldTooSmall(2) when one of
/// the quadratics has no root in nf.field(), VerificationFailure if the
/// result does not preserve the pencil with pushforward A.
AutRep construct_lift(const LiftData& ld, const PencilNormalForm& nf);

struct StabilizerEntry {
  PGL2Elem element;
  LiftData data;
  LiftVerdict verdict;
  std::optional<AutRep> lift;  // over the report's field
};

struct ComponentGroupReport {
  std::vector<AutRep> kernel;  // over the report's field
  std::vector<StabilizerEntry> stabilizer;
  std::uint64_t order = 0;
  Embedding extension;  // normal-form field -> field of the lifts

  bool lifts_over_extension() const noexcept { return !extension.is_identity(); }
  std::size_t liftable_count() const noexcept;
  /// Kernel generators followed by one lift per liftable element.
  std::vector<Matrix> generators() const;
};

ComponentGroupReport component_group(const PencilNormalForm& nf);

/// Closure of the generators under multiplication, as canonical matrices in
/// a deterministic order. Throws BudgetExceeded past `limit` elements.
std::vector<Matrix> group_closure(const std::vector<Matrix>& generators, std::size_t limit);

struct OracleResult {
  std::vector<AutRep> automorphisms;  // canonical S, deterministic order
  std::uint64_t evaluations = 0;      // block candidates tested
  std::uint64_t naive_space = 0;      // (M+1)! q^(2(M+1)), saturating
  static constexpr const char* kCompleteness =
      "complete conditional on the block-form classification, sound unconditionally";
};

/// Upper bound on the evaluations structured_oracle performs (saturating).
std::uint64_t oracle_evaluation_count(const PencilNormalForm& nf);

/// Every block-shaped automorphism over nf.field(), modulo scalars.
/// Throws BudgetExceeded when oracle_evaluation_count exceeds `budget`.
OracleResult structured_oracle(const PencilNormalForm& nf, std::uint64_t budget);

}  // namespace c2pencil
