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

#include "c2pencil/autgroup.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace c2pencil {

namespace {

using Key = std::vector<std::uint64_t>;

Key key_of(const Matrix& m) {
  Key k;
  k.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j).bits());
  return k;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = sat_mul(r, base);
  return r;
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= k; ++i) r = sat_mul(r, i);
  return r;
}

Matrix two_by_two(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                  const FieldElement& d) {
  return Matrix(a.field(), {{a, b}, {c, d}});
}

// Rescales S so its first nonzero entry is 1, carrying the coefficients along.
void canonicalize(AutRep& ar) {
  const Matrix c = canonical_scaling(ar.S);
  for (std::size_t i = 0; i < ar.S.rows() * ar.S.cols(); ++i) {
    const auto& x = ar.S(i / ar.S.cols(), i % ar.S.cols());
    if (x.is_zero()) continue;
    const FieldElement scale = c(i / c.cols(), i % c.cols()) / x;
    for (auto& [alpha, beta] : ar.coeffs) {
      alpha *= scale;
      beta *= scale;
    }
    break;
  }
  ar.S = c;
}

// The two-variable block forms a_k X Y and b_k X Y + X^2 + Y^2.
std::pair<QuadraticForm, QuadraticForm> block_forms(const PencilNormalForm& nf, std::size_t k) {
  QuadraticForm f(nf.field(), 2), g(nf.field(), 2);
  f.set(0, 1, nf.a(k));
  g.set(0, 1, nf.b(k));
  g.set(0, 0, FieldElement::one(nf.field()));
  g.set(1, 1, FieldElement::one(nf.field()));
  return {f, g};
}

Matrix block(const FieldElement& alpha, const FieldElement& beta) {
  return two_by_two(alpha, beta, beta, alpha);
}

}  // namespace

Matrix canonical_scaling(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return m * m(i, j).inverse();
  return m;
}

bool equal_mod_scalars(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return canonical_scaling(a) == canonical_scaling(b);
}

// ---------------------------------------------------------------------------
// PGL_2

PGL2Elem::PGL2Elem(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != 2 || m_.cols() != 2) throw Error(ErrorKind::InvalidInput, "PGL_2 element must be 2x2");
  if (det(m_).is_zero()) throw Error(ErrorKind::InvalidInput, "PGL_2 element must be invertible");
}

PGL2Elem PGL2Elem::identity(const FieldSpec& field) { return PGL2Elem(Matrix::identity(field, 2)); }

P1Point PGL2Elem::apply(const P1Point& p) const {
  const Vector v = m_ * Vector{p.s, p.t};
  return P1Point::make(v[0], v[1]);
}

PGL2Elem PGL2Elem::inverse() const { return PGL2Elem(c2pencil::inverse(m_)); }

bool PGL2Elem::is_identity() const { return canonical() == Matrix::identity(field(), 2); }

// ---------------------------------------------------------------------------
// Block-shaped matrices and pushforwards

const char* to_string(LiftStatus s) {
  switch (s) {
    case LiftStatus::Pass: return "pass";
    case LiftStatus::FailsDeterminant: return "fails-determinant";
    case LiftStatus::FailsPairProduct: return "fails-pair-product";
  }
  return "unknown";
}

std::string LiftVerdict::describe() const {
  switch (status) {
    case LiftStatus::Pass:
      return "liftable";
    case LiftStatus::FailsDeterminant:
      return "det A = " + value->hex() + " but a_tau(i) lambda_i^2 / a_i = " + required->hex() +
             " at i = " + std::to_string(i);
    case LiftStatus::FailsPairProduct:
      return "pair product for j = " + std::to_string(j) + " is " + value->hex() + " from i = " +
             std::to_string(i) + " but " + required->hex() + " from i = " + std::to_string(k);
  }
  return "unknown";
}

Matrix block_matrix(std::size_t M, const std::vector<std::size_t>& tau,
                    const std::vector<std::pair<FieldElement, FieldElement>>& coeffs) {
  if (tau.size() != M + 1 || coeffs.size() != M + 1)
    throw Error(ErrorKind::InvalidInput, "block data must have M+1 entries");
  const FieldSpec& field = coeffs.front().first.field();
  Matrix s(field, 2 * M + 2, 2 * M + 2);
  for (std::size_t j = 0; j <= M; ++j) {
    const std::size_t t = tau[j];
    if (t > M) throw Error(ErrorKind::InvalidInput, "permutation index out of range");
    const auto& [alpha, beta] = coeffs[j];
    s(t, j) = alpha;
    s(t, M + 1 + j) = beta;
    s(M + 1 + t, j) = beta;
    s(M + 1 + t, M + 1 + j) = alpha;
  }
  return s;
}

std::optional<std::pair<FieldElement, FieldElement>> decompose_in_pencil(const QuadraticForm& q,
                                                                         const QuadraticForm& f,
                                                                         const QuadraticForm& g) {
  if (q.n() != f.n() || q.n() != g.n() || &q.field() != &f.field() || &q.field() != &g.field())
    throw Error(ErrorKind::FieldMismatch, "forms must share field and variable count");
  const std::size_t n = q.n();
  // Two coefficient positions on which (f, g) are independent.
  std::optional<std::pair<std::size_t, std::size_t>> first;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const FieldElement fc = f.coeff(i, j), gc = g.coeff(i, j);
      if (fc.is_zero() && gc.is_zero()) continue;
      if (!first) {
        first = {i, j};
        continue;
      }
      const FieldElement f1 = f.coeff(first->first, first->second);
      const FieldElement g1 = g.coeff(first->first, first->second);
      const FieldElement d = f1 * gc + g1 * fc;
      if (d.is_zero()) continue;
      const FieldElement q1 = q.coeff(first->first, first->second), q2 = q.coeff(i, j);
      const FieldElement c = (q1 * gc + g1 * q2) / d;
      const FieldElement e = (f1 * q2 + fc * q1) / d;
      if (f * c + g * e != q) return std::nullopt;
      return std::make_pair(c, e);
    }
  }
  throw Error(ErrorKind::InvalidInput, "f and g are linearly dependent");
}

std::optional<PGL2Elem> try_pushforward(const Matrix& s, const PencilNormalForm& nf) {
  if (&s.field() != &nf.field()) throw Error(ErrorKind::FieldMismatch, "matrix and pencil fields differ");
  if (s.rows() != nf.n() || s.cols() != nf.n())
    throw Error(ErrorKind::InvalidInput, "matrix size does not match the pencil");
  if (det(s).is_zero()) return std::nullopt;
  const QuadraticForm f = nf.f(), g = nf.g();
  const auto fs = decompose_in_pencil(substitute(f, s), f, g);
  if (!fs) return std::nullopt;
  const auto gs = decompose_in_pencil(substitute(g, s), f, g);
  if (!gs) return std::nullopt;
  const Matrix a = two_by_two(fs->first, fs->second, gs->first, gs->second);
  if (det(a).is_zero()) return std::nullopt;
  return PGL2Elem(a);
}

PGL2Elem pushforward(const AutRep& ar, const PencilNormalForm& nf) {
  auto a = try_pushforward(ar.S, nf);
  if (!a) throw Error(ErrorKind::InvalidInput, "matrix does not preserve the pencil");
  return *a;
}

AutRep make_autrep(const Matrix& s, const PencilNormalForm& nf) {
  const std::size_t M = nf.M();
  auto pf = try_pushforward(s, nf);
  if (!pf) throw Error(ErrorKind::InvalidInput, "matrix does not preserve the pencil");
  const FieldElement zero = FieldElement::zero(nf.field());
  std::vector<std::size_t> tau(M + 1, M + 1);
  std::vector<std::pair<FieldElement, FieldElement>> coeffs(M + 1, {zero, zero});
  for (std::size_t j = 0; j <= M; ++j) {
    for (std::size_t k = 0; k <= M; ++k) {
      if (s(k, j).is_zero() && s(M + 1 + k, j).is_zero()) continue;
      if (tau[j] != M + 1) throw Error(ErrorKind::InvalidInput, "matrix is not block shaped");
      tau[j] = k;
      coeffs[j] = {s(k, j), s(M + 1 + k, j)};
    }
    if (tau[j] == M + 1) throw Error(ErrorKind::InvalidInput, "matrix is singular");
  }
  if (block_matrix(M, tau, coeffs) != s) throw Error(ErrorKind::InvalidInput, "matrix is not block shaped");
  return AutRep{s, std::move(tau), std::move(coeffs), *pf};
}

std::vector<AutRep> kernel_generators(const PencilNormalForm& nf) {
  const std::size_t M = nf.M();
  const FieldElement zero = FieldElement::zero(nf.field()), one = FieldElement::one(nf.field());
  std::vector<std::size_t> id(M + 1);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::vector<AutRep> out;
  for (std::size_t i = 0; i <= M; ++i) {
    std::vector<std::pair<FieldElement, FieldElement>> coeffs(M + 1, {one, zero});
    coeffs[i] = {zero, one};
    out.push_back(AutRep{block_matrix(M, id, coeffs), id, coeffs, PGL2Elem::identity(nf.field())});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Infinitesimal automorphisms

TangentSpace tangent_space(const PencilNormalForm& nf) {
  const std::size_t n = nf.n();
  const FieldSpec& field = nf.field();
  const std::size_t unknowns = n * n + 1;
  const std::size_t gamma_col = n * n;
  const QuadraticForm forms[2] = {nf.f(), nf.g()};
  std::vector<Vector> rows;
  for (const auto& q : forms) {
    const Matrix a = polar_form(q);
    // Coefficient of x_k x_l in x^T A D x - gamma q(x).
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = k; l < n; ++l) {
        Vector row = zero_vector(field, unknowns);
        for (std::size_t m = 0; m < n; ++m) {
          row[m * n + l] += a(k, m);
          if (l != k) row[m * n + k] += a(l, m);
        }
        row[gamma_col] = q.coeff(k, l);
        rows.push_back(std::move(row));
      }
    }
  }
  TangentSpace ts;
  for (const Vector& v : kernel(Matrix(field, rows))) {
    Matrix d(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(i, j) = v[i * n + j];
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t partner = i < half ? i + half : i - half;
      if (d(i, i) != d(partner, partner)) ts.block_scalar = false;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && !d(i, j).is_zero()) ts.block_scalar = false;
    }
    if (!v[gamma_col].is_zero()) ts.gamma_zero = false;
    ts.basis.push_back(std::move(d));
    ts.gamma.push_back(v[gamma_col]);
  }
  return ts;
}

namespace {

unsigned coefficient_field_degree(const PencilNormalForm& nf, unsigned d) {
  const unsigned m = nf.field().degree();
  if (d == 0) return m;
  if (m % d != 0)
    throw Error(ErrorKind::InvalidInput, "coefficient degree " + std::to_string(d) + " does not divide " +
                                             std::to_string(m));
  return d;
}

std::vector<FieldElement> subfield_elements(const FieldSpec& field, unsigned d) {
  std::vector<FieldElement> out;
  if (d == field.degree()) {
    for (std::uint64_t x = 0; x < field.size(); ++x) out.emplace_back(field, x);
    return out;
  }
  if (field.degree() > 24) throw Error(ErrorKind::InvalidInput, "proper coefficient subfields need m <= 24");
  const std::uint64_t q = std::uint64_t{1} << d;
  for (std::uint64_t x = 0; x < field.size(); ++x)
    if (field.pow(x, q) == x) out.emplace_back(field, x);
  return out;
}

}  // namespace

std::uint64_t aut0_candidate_count(const PencilNormalForm& nf, unsigned n, unsigned coefficient_degree) {
  const unsigned d = coefficient_field_degree(nf, coefficient_degree);
  if (n == 0) return 1;
  return sat_pow(std::uint64_t{1} << d, std::uint64_t{n - 1} * (2 * nf.M() + 1));
}

std::uint64_t aut0_count_truncated(const PencilNormalForm& nf, unsigned n, std::uint64_t budget,
                                   unsigned coefficient_degree) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "truncation order must be at least 1");
  const std::uint64_t candidates = aut0_candidate_count(nf, n, coefficient_degree);
  if (candidates > budget)
    throw Error(ErrorKind::BudgetExceeded, "truncated count needs " + std::to_string(candidates) +
                                               " candidates, budget is " + std::to_string(budget));
  const FieldSpec& field = nf.field();
  const std::vector<FieldElement> digits_of = subfield_elements(field, coefficient_field_degree(nf, coefficient_degree));
  const std::size_t M = nf.M();
  using T = TruncatedElement;
  const T zero(field, n);
  const T one = T::constant(FieldElement::one(field), n);
  const std::uint64_t q = digits_of.size();

  // Free digits: eps^1..eps^{n-1} of beta_0, then of alpha_i and beta_i for i >= 1.
  const std::size_t per = n - 1;
  const std::size_t digits = per * (2 * M + 1);
  std::vector<std::uint64_t> d(digits, 0);
  auto element = [&](std::size_t offset, bool unit) {
    std::vector<FieldElement> c(n, FieldElement::zero(field));
    if (unit) c[0] = FieldElement::one(field);
    for (std::size_t e = 0; e < per; ++e) c[e + 1] = digits_of[d[offset + e]];
    return T(std::move(c));
  };
  struct Lin {
    T x, y;
  };
  // (u_x x + u_y y)(v_x x + v_y y) as (x^2, xy, y^2) coefficients.
  auto product = [](const Lin& u, const Lin& v) {
    return std::array<T, 3>{u.x * v.x, u.x * v.y + u.y * v.x, u.y * v.y};
  };

  std::uint64_t count = 0;
  for (std::uint64_t iter = 0; iter < candidates; ++iter) {
    std::vector<std::pair<T, T>> ab;
    ab.emplace_back(one, element(0, false));
    for (std::size_t i = 1; i <= M; ++i)
      ab.emplace_back(element(per * (2 * i - 1), true), element(per * (2 * i), false));

    std::optional<T> c;
    bool ok = true;
    for (std::size_t i = 0; i <= M && ok; ++i) {
      const Lin X{ab[i].first, ab[i].second}, Y{ab[i].second, ab[i].first};
      const auto xy = product(X, Y), xx = product(X, X), yy = product(Y, Y);
      const T ai = T::constant(nf.a(i), n), bi = T::constant(nf.b(i), n);
      std::vector<T> fs, gs;
      for (int k = 0; k < 3; ++k) {
        fs.push_back(ai * xy[k]);
        gs.push_back(bi * xy[k] + xx[k] + yy[k]);
      }
      if (!c) c = fs[1] * T::constant(nf.a(0).inverse(), n);
      ok = fs[0] == zero && fs[2] == zero && fs[1] == ai * *c && gs[0] == *c && gs[2] == *c &&
           gs[1] == bi * *c;
    }
    if (ok) ++count;

    for (std::size_t k = 0; k < digits; ++k) {
      if (++d[k] < q) break;
      d[k] = 0;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Stabilizer and lifting

namespace {

// Sends [1:0], [0:1], [1:1] to p0, p1, p2.
Matrix frame(const P1Point& p0, const P1Point& p1, const P1Point& p2) {
  const Matrix cols = two_by_two(p0.s, p1.s, p0.t, p1.t);
  const Vector lam = inverse(cols) * Vector{p2.s, p2.t};
  return two_by_two(lam[0] * p0.s, lam[1] * p1.s, lam[0] * p0.t, lam[1] * p1.t);
}

}  // namespace

std::vector<PGL2Elem> p1_set_stabilizer(const std::vector<P1Point>& points) {
  if (points.size() < 3) throw Error(ErrorKind::InvalidInput, "stabilizer needs at least three points");
  const std::set<P1Point> set(points.begin(), points.end());
  if (set.size() != points.size()) throw Error(ErrorKind::InvalidInput, "points must be distinct");
  const Matrix base_inv = inverse(frame(points[0], points[1], points[2]));
  std::map<Key, PGL2Elem> found;
  const std::size_t k = points.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        if (i == j || j == l || i == l) continue;
        const PGL2Elem g(frame(points[i], points[j], points[l]) * base_inv);
        const bool keeps = std::all_of(points.begin(), points.end(),
                                       [&](const P1Point& p) { return set.count(g.apply(p)) > 0; });
        if (keeps) found.emplace(key_of(g.canonical()), PGL2Elem(g.canonical()));
      }
  std::vector<PGL2Elem> out;
  for (auto& [key, g] : found) out.push_back(g);
  for (const auto& x : out)
    for (const auto& y : out)
      if (!found.count(key_of((x * y).canonical())))
        throw Error(ErrorKind::VerificationFailure, "stabilizer is not closed under composition");
  return out;
}

LiftData lift_scalars(const PGL2Elem& a, const PencilNormalForm& nf) {
  return lift_scalars(a.canonical(), nf);
}

LiftData lift_scalars(const Matrix& a, const PencilNormalForm& nf) {
  const PGL2Elem checked(a);
  if (&a.field() != &nf.field()) throw Error(ErrorKind::FieldMismatch, "element and pencil fields differ");
  const std::size_t M = nf.M();
  const auto points = nf.points();
  LiftData ld{a, std::vector<std::size_t>(M + 1), {}, det(a)};
  for (std::size_t i = 0; i <= M; ++i) {
    const Vector v = a * Vector{nf.a(i), nf.b(i)};
    const P1Point image = P1Point::make(v[0], v[1]);
    const auto it = std::find(points.begin(), points.end(), image);
    if (it == points.end())
      throw Error(ErrorKind::NotInStabilizer,
                  "image " + image.str() + " of point " + std::to_string(i) + " is not a singular point");
    const std::size_t k = static_cast<std::size_t>(it - points.begin());
    ld.tau[i] = k;
    ld.lambdas.push_back(v[0] / nf.a(k));
  }
  return ld;
}

namespace {

FieldElement pair_product(const LiftData& ld, const PencilNormalForm& nf, std::size_t i, std::size_t j) {
  const std::size_t ti = ld.tau[i], tj = ld.tau[j];
  return nf.a(ti) * (ld.lambdas[i] + ld.lambdas[j]) / (nf.a(ti) * nf.b(tj) + nf.a(tj) * nf.b(ti));
}

}  // namespace

LiftVerdict lift_check(const LiftData& ld, const PencilNormalForm& nf) {
  const std::size_t M = nf.M();
  if (ld.tau.size() != M + 1 || ld.lambdas.size() != M + 1)
    throw Error(ErrorKind::InvalidInput, "lift data does not match the pencil");
  LiftVerdict v;
  for (std::size_t i = 0; i <= M; ++i) {
    const FieldElement required = nf.a(ld.tau[i]) * ld.lambdas[i].square() / nf.a(i);
    if (ld.det != required) {
      v.status = LiftStatus::FailsDeterminant;
      v.i = i;
      v.value = ld.det;
      v.required = required;
      return v;
    }
  }
  for (std::size_t j = 0; j <= M; ++j) {
    std::optional<std::pair<std::size_t, FieldElement>> ref;
    for (std::size_t i = 0; i <= M; ++i) {
      if (i == j) continue;
      const FieldElement p = pair_product(ld, nf, i, j);
      if (!ref) {
        ref = {i, p};
      } else if (p != ref->second) {
        v.status = LiftStatus::FailsPairProduct;
        v.j = j;
        v.i = ref->first;
        v.k = i;
        v.value = ref->second;
        v.required = p;
        return v;
      }
    }
  }
  return v;
}

AutRep construct_lift(const LiftData& ld, const PencilNormalForm& nf) {
  const LiftVerdict verdict = lift_check(ld, nf);
  if (!verdict.passes()) throw Error(ErrorKind::InvalidInput, "element does not lift: " + verdict.describe());
  const std::size_t M = nf.M();
  std::vector<std::pair<FieldElement, FieldElement>> coeffs;
  for (std::size_t j = 0; j <= M; ++j) {
    const FieldElement root_lambda = ld.lambdas[j].sqrt();
    const FieldElement p = pair_product(ld, nf, j == 0 ? 1 : 0, j);
    const auto roots = solve_quadratic(root_lambda, p);
    if (!roots)
      throw FieldTooSmall(2, "lift coefficients for pair " + std::to_string(j) +
                                 " need a quadratic extension");
    coeffs.emplace_back(roots->second, roots->second + root_lambda);
  }
  AutRep ar{block_matrix(M, ld.tau, coeffs), ld.tau, coeffs, PGL2Elem(ld.representative)};
  const auto pf = try_pushforward(ar.S, nf);
  if (!pf || *pf != ar.pushforward)
    throw Error(ErrorKind::VerificationFailure, "constructed lift does not induce the given element");
  canonicalize(ar);
  ar.pushforward = *pf;
  return ar;
}

// ---------------------------------------------------------------------------
// Component group

std::size_t ComponentGroupReport::liftable_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(stabilizer.begin(), stabilizer.end(), [](const StabilizerEntry& e) { return e.verdict.passes(); }));
}

std::vector<Matrix> ComponentGroupReport::generators() const {
  std::vector<Matrix> out;
  for (const auto& k : kernel) out.push_back(k.S);
  for (const auto& e : stabilizer)
    if (e.lift) out.push_back(e.lift->S);
  return out;
}

ComponentGroupReport component_group(const PencilNormalForm& nf) {
  const std::size_t M = nf.M();
  if (M < 2) throw Error(ErrorKind::InvalidInput, "component group needs M >= 2");
  if (M + 1 >= 64) throw Error(ErrorKind::InvalidInput, "too many pairs");
  ComponentGroupReport report{{}, {}, 0, Embedding(nf.field())};
  for (const PGL2Elem& g : p1_set_stabilizer(nf.points())) {
    LiftData ld = lift_scalars(g, nf);
    LiftVerdict v = lift_check(ld, nf);
    report.stabilizer.push_back(StabilizerEntry{g, std::move(ld), v, std::nullopt});
  }

  // Liftable elements must form a subgroup.
  std::set<Key> liftable;
  for (const auto& e : report.stabilizer)
    if (e.verdict.passes()) liftable.insert(key_of(e.element.canonical()));
  for (const auto& x : report.stabilizer)
    for (const auto& y : report.stabilizer)
      if (x.verdict.passes() && y.verdict.passes() && !liftable.count(key_of((x.element * y.element).canonical())))
        throw Error(ErrorKind::VerificationFailure, "liftable elements are not closed under composition");

  auto build = [&](const PencilNormalForm& over, const Embedding& e) {
    report.kernel = kernel_generators(over);
    for (auto& entry : report.stabilizer) {
      if (!entry.verdict.passes()) continue;
      entry.lift = construct_lift(lift_scalars(PGL2Elem(embed(e, entry.element.canonical())), over), over);
    }
  };
  try {
    build(nf, report.extension);
  } catch (const FieldTooSmall&) {
    report.extension = extend_field(nf.field(), 2);
    build(nf.embedded(report.extension), report.extension);
  }
  report.order = (std::uint64_t{1} << (M + 1)) * report.liftable_count();
  return report;
}

std::vector<Matrix> group_closure(const std::vector<Matrix>& generators, std::size_t limit) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  const Matrix id = Matrix::identity(generators.front().field(), generators.front().rows());
  std::map<Key, Matrix> seen{{key_of(id), id}};
  std::vector<Matrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Matrix y = canonical_scaling(x * g);
        if (seen.emplace(key_of(y), y).second) {
          if (seen.size() > limit)
            throw Error(ErrorKind::BudgetExceeded, "group closure exceeds " + std::to_string(limit) + " elements");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Matrix> out;
  for (auto& [k, m] : seen) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

std::uint64_t oracle_evaluation_count(const PencilNormalForm& nf) {
  const std::uint64_t q = nf.field().size();
  const std::uint64_t per_block = sat_mul(q, q) - q;
  return sat_mul(factorial(nf.M() + 1), sat_mul(q, sat_add(1, sat_mul(nf.M(), per_block))));
}

OracleResult structured_oracle(const PencilNormalForm& nf, std::uint64_t budget) {
  const std::uint64_t needed = oracle_evaluation_count(nf);
  if (needed > budget)
    throw Error(ErrorKind::BudgetExceeded, "oracle needs " + std::to_string(needed) +
                                               " block evaluations, budget is " + std::to_string(budget));
  const FieldSpec& field = nf.field();
  const std::size_t M = nf.M();
  const std::uint64_t q = field.size();
  const FieldElement one = FieldElement::one(field);
  std::vector<std::pair<QuadraticForm, QuadraticForm>> forms;
  for (std::size_t k = 0; k <= M; ++k) forms.push_back(block_forms(nf, k));

  OracleResult result;
  result.naive_space = sat_mul(factorial(M + 1), sat_pow(q, 2 * (M + 1)));
  std::map<Key, AutRep> found;
  std::vector<std::size_t> tau(M + 1);
  std::iota(tau.begin(), tau.end(), std::size_t{0});
  do {
    // Scalars are fixed by alpha_0 + beta_0 = 1.
    for (std::uint64_t a0 = 0; a0 < q; ++a0) {
      ++result.evaluations;
      const FieldElement alpha0(field, a0), beta0 = alpha0 + one;
      const Matrix b0 = block(alpha0, beta0);
      const auto& [f0, g0] = forms[0];
      const auto fc = decompose_in_pencil(substitute(forms[tau[0]].first, b0), f0, g0);
      const auto gc = decompose_in_pencil(substitute(forms[tau[0]].second, b0), f0, g0);
      if (!fc || !gc) continue;
      const FieldElement A00 = fc->first, A01 = fc->second, A10 = gc->first, A11 = gc->second;

      std::vector<std::vector<std::pair<FieldElement, FieldElement>>> choices(M + 1);
      choices[0].emplace_back(alpha0, beta0);
      bool all = true;
      for (std::size_t j = 1; j <= M && all; ++j) {
        const auto& [fj, gj] = forms[j];
        const QuadraticForm want_f = fj * A00 + gj * A01, want_g = fj * A10 + gj * A11;
        for (std::uint64_t x = 0; x < q; ++x)
          for (std::uint64_t y = 0; y < q; ++y) {
            if (x == y) continue;
            ++result.evaluations;
            const Matrix bj = block(FieldElement(field, x), FieldElement(field, y));
            if (substitute(forms[tau[j]].first, bj) == want_f && substitute(forms[tau[j]].second, bj) == want_g)
              choices[j].emplace_back(FieldElement(field, x), FieldElement(field, y));
          }
        all = !choices[j].empty();
      }
      if (!all) continue;

      std::vector<std::size_t> idx(M + 1, 0);
      while (true) {
        std::vector<std::pair<FieldElement, FieldElement>> coeffs;
        for (std::size_t j = 0; j <= M; ++j) coeffs.push_back(choices[j][idx[j]]);
        AutRep ar{block_matrix(M, tau, coeffs), tau, coeffs, PGL2Elem::identity(field)};
        const auto pf = try_pushforward(ar.S, nf);
        if (!pf || !equal_mod_scalars(pf->matrix(), two_by_two(A00, A01, A10, A11)))
          throw Error(ErrorKind::VerificationFailure, "oracle candidate failed full substitution");
        ar.pushforward = *pf;
        canonicalize(ar);
        found.emplace(key_of(ar.S), std::move(ar));
        std::size_t k = 0;
        while (k <= M && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k > M) break;
      }
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
  for (auto& [k, ar] : found) result.automorphisms.push_back(std::move(ar));
  return result;
}

}  // namespace c2pencil
