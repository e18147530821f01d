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

#include "c2pencil/pencil.hpp"

#include <algorithm>
#include <optional>

namespace c2pencil {

QuadraticForm::QuadraticForm(const FieldSpec& field, std::size_t n)
    : field_(&field), n_(n), coeffs_(n * n, FieldElement::zero(field)) {}

std::size_t QuadraticForm::index(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw Error(ErrorKind::InvalidInput, "variable index out of range");
  return i <= j ? i * n_ + j : j * n_ + i;
}

FieldElement QuadraticForm::coeff(std::size_t i, std::size_t j) const { return coeffs_[index(i, j)]; }

void QuadraticForm::set(std::size_t i, std::size_t j, const FieldElement& c) {
  if (&c.field() != field_) throw Error(ErrorKind::FieldMismatch, "coefficient from another field");
  coeffs_[index(i, j)] = c;
}

void QuadraticForm::add(std::size_t i, std::size_t j, const FieldElement& c) {
  const std::size_t k = index(i, j);
  coeffs_[k] = coeffs_[k] + c;
}

std::vector<QuadraticForm::Term> QuadraticForm::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      const FieldElement& c = coeffs_[i * n_ + j];
      if (!c.is_zero()) out.push_back({i, j, c});
    }
  }
  return out;
}

FieldElement QuadraticForm::operator()(const Vector& x) const {
  if (x.size() != n_) throw Error(ErrorKind::InvalidInput, "evaluation point has wrong length");
  FieldElement acc = FieldElement::zero(*field_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    FieldElement row = FieldElement::zero(*field_);
    for (std::size_t j = i; j < n_; ++j) row += coeffs_[i * n_ + j] * x[j];
    acc += x[i] * row;
  }
  return acc;
}

QuadraticForm QuadraticForm::operator+(const QuadraticForm& o) const {
  if (o.field_ != field_ || o.n_ != n_) throw Error(ErrorKind::InvalidInput, "adding incompatible forms");
  QuadraticForm out(*this);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] += o.coeffs_[k];
  return out;
}

QuadraticForm QuadraticForm::operator*(const FieldElement& c) const {
  QuadraticForm out(*this);
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

bool QuadraticForm::operator==(const QuadraticForm& o) const {
  return field_ == o.field_ && n_ == o.n_ && coeffs_ == o.coeffs_;
}

bool QuadraticForm::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

Matrix polar_form(const QuadraticForm& q) {
  Matrix a(q.field(), q.n(), q.n());
  for (std::size_t i = 0; i < q.n(); ++i) {
    for (std::size_t j = i + 1; j < q.n(); ++j) {
      a(i, j) = q.coeff(i, j);
      a(j, i) = q.coeff(i, j);
    }
  }
  return a;
}

QuadraticForm substitute(const QuadraticForm& q, const Matrix& s) {
  if (!s.is_square() || s.rows() != q.n()) throw Error(ErrorKind::InvalidInput, "substitution size mismatch");
  // Off-diagonal part from the polar form S^T A S, squares from q(S e_k).
  const Matrix polar = s.transpose() * polar_form(q) * s;
  QuadraticForm out(q.field(), q.n());
  for (std::size_t k = 0; k < q.n(); ++k) {
    out.set(k, k, q(s.col(k)));
    for (std::size_t l = k + 1; l < q.n(); ++l) out.set(k, l, polar(k, l));
  }
  return out;
}

QuadraticForm embed(const Embedding& e, const QuadraticForm& q) {
  QuadraticForm out(e.to(), q.n());
  for (const auto& t : q.terms()) out.set(t.i, t.j, e(t.c));
  return out;
}

Pencil::Pencil(QuadraticForm f, QuadraticForm g) : f_(std::move(f)), g_(std::move(g)) {
  if (&f_.field() != &g_.field()) throw Error(ErrorKind::FieldMismatch, "pencil members over different fields");
  if (f_.n() != g_.n()) throw Error(ErrorKind::InvalidInput, "pencil members with different variable counts");
  if (f_.n() < 4 || f_.n() % 2 != 0) {
    throw Error(ErrorKind::InvalidInput, "pencil needs an even number of variables, at least 4");
  }
  // Dependent iff one is a multiple of the other (or zero).
  bool dependent = f_.is_zero() || g_.is_zero();
  if (!dependent) {
    const auto ft = f_.terms();
    const FieldElement ratio = g_.coeff(ft.front().i, ft.front().j) / ft.front().c;
    dependent = g_ == f_ * ratio;
  }
  if (dependent) throw Error(ErrorKind::InvalidInput, "pencil members are linearly dependent");
}

QuadraticForm Pencil::member(const FieldElement& s, const FieldElement& t) const {
  return f_ * s + g_ * t;
}

Pencil embed(const Embedding& e, const Pencil& p) { return Pencil(embed(e, p.f()), embed(e, p.g())); }

BinaryForm pfaffian_form(const Pencil& p) {
  const FieldSpec& base = p.field();
  const unsigned d = static_cast<unsigned>(p.M()) + 1;
  // Interpolate Pf(A_f + t A_g) at d + 1 nodes, in an extension if the field
  // is too small to supply them.
  unsigned ext = 1;
  while ((std::uint64_t{1} << std::min(63u, base.degree() * ext)) < d + 1) ++ext;
  const Embedding e = ext == 1 ? Embedding(base) : extend_field(base, ext);
  const Matrix af = embed(e, polar_form(p.f()));
  const Matrix ag = embed(e, polar_form(p.g()));
  std::vector<FieldElement> xs, ys;
  for (std::uint64_t k = 0; k <= d; ++k) {
    const FieldElement t(e.to(), k);
    xs.push_back(t);
    ys.push_back(pfaffian(af + ag * t));
  }
  const UniPoly poly = interpolate(xs, ys);
  std::vector<FieldElement> coeffs;
  for (unsigned j = 0; j <= d; ++j) {
    const auto c = e.preimage(poly.coeff(j));
    if (!c) throw Error(ErrorKind::VerificationFailure, "Pfaffian coefficient outside the base field");
    coeffs.push_back(*c);
  }
  return BinaryForm(base, std::move(coeffs));
}

BinaryFormRoots pfaffian_points(const Pencil& p) {
  BinaryFormRoots zeros = binary_form_roots(pfaffian_form(p));
  for (auto& r : zeros.roots) r.point = P1Point::make(r.point.t, r.point.s);
  std::sort(zeros.roots.begin(), zeros.roots.end(),
            [](const P1Root& x, const P1Root& y) { return x.point < y.point; });
  return zeros;
}

namespace {

struct NeedExtension {
  unsigned degree;
};

/// Checks distinct roots and picks the field in which the Pfaffian splits.
Embedding splitting_extension(const Pencil& p, bool allow_extend) {
  const BinaryForm pf = pfaffian_form(p);
  if (!squarefree_check(pf)) {
    throw Error(ErrorKind::RepeatedPfaffianRoots, "the Pfaffian form has a repeated root");
  }
  const unsigned d = splitting_degree(pf);
  if (d == 1) return Embedding(p.field());
  if (!allow_extend) {
    throw FieldTooSmall(d, "the Pfaffian splits only over a degree-" + std::to_string(d) + " extension");
  }
  return extend_field(p.field(), d);
}

std::array<Vector, 2> kernel_plane(const QuadraticForm& h) {
  const auto k = kernel(polar_form(h));
  if (k.size() != 2) {
    throw Error(ErrorKind::VerificationFailure,
                "singular member has a kernel of dimension " + std::to_string(k.size()));
  }
  return {k[0], k[1]};
}

std::vector<SingularMember> members_over(const Pencil& p) {
  const BinaryFormRoots pts = pfaffian_points(p);
  if (!pts.split) throw Error(ErrorKind::VerificationFailure, "Pfaffian does not split in the working field");
  std::vector<SingularMember> out;
  for (const auto& r : pts.roots) {
    const FieldElement& a = r.point.s;
    const FieldElement& b = r.point.t;
    QuadraticForm h = p.member(b, a);
    auto plane = kernel_plane(h);
    out.push_back({r.point, a, b, std::move(h), std::move(plane)});
  }
  return out;
}

Vector combine(const FieldElement& x, const Vector& u, const FieldElement& y, const Vector& v) {
  Vector out(u.size(), FieldElement::zero(x.field()));
  for (std::size_t k = 0; k < u.size(); ++k) out[k] = x * u[k] + y * v[k];
  return out;
}

struct PlaneBasis {
  FieldElement a;
  FieldElement b;
  Vector x;
  Vector y;
};

/// Whether q is nondegenerate on the plane and has an isotropic vector in it.
bool splits_on_plane(const QuadraticForm& q, const Matrix& aq, const std::array<Vector, 2>& plane) {
  const FieldElement cross = pairing(aq, plane[0], plane[1]);
  if (cross.is_zero()) return false;
  const FieldElement q1 = q(plane[0]);
  if (q1.is_zero()) return true;
  return (q1 * q(plane[1]) / cross.square()).trace() == 0;
}

PencilNormalForm::Pair pair_of(const PlaneBasis& pb) { return {pb.a, pb.b}; }

/// f-isotropic basis (u, w) of a kernel plane, rescaled so that g(u) = g(w) = 1.
PlaneBasis normalize_plane(const QuadraticForm& f, const QuadraticForm& g, const Matrix& af,
                           const Matrix& ag, const std::array<Vector, 2>& plane, std::size_t index) {
  const FieldSpec& field = f.field();
  const FieldElement one = FieldElement::one(field);
  const Vector& k1 = plane[0];
  const Vector& k2 = plane[1];
  const FieldElement f1 = f(k1);
  const FieldElement f2 = f(k2);
  const FieldElement cross = pairing(af, k1, k2);
  if (cross.is_zero()) throw Error(ErrorKind::VerificationFailure, "f is degenerate on a kernel plane");
  Vector u, w;
  if (f1.is_zero()) {
    u = k1;
    w = combine(f2 / cross, k1, one, k2);
  } else {
    // f(T k1 + k2) = f1 T^2 + cross T + f2.
    const auto roots = solve_quadratic(cross / f1, f2 / f1);
    if (!roots) throw NeedExtension{2};
    u = combine(roots->first, k1, one, k2);
    w = combine(roots->second, k1, one, k2);
  }
  const FieldElement c = g(u);
  const FieldElement d = g(w);
  if (c.is_zero() || d.is_zero()) {
    throw Error(ErrorKind::NotSmooth, "the intersection is singular: pair " + std::to_string(index) +
                                          " has a vanishing square coefficient");
  }
  const FieldElement cu = c.sqrt().inverse();
  const FieldElement cw = d.sqrt().inverse();
  for (auto& x : u) x *= cu;
  for (auto& x : w) x *= cw;
  return {pairing(af, u, w), pairing(ag, u, w), std::move(u), std::move(w)};
}

PencilNormalForm::Pair embed_pair(const Embedding& e, const PencilNormalForm::Pair& p) {
  return {e(p.first), e(p.second)};
}

}  // namespace

PencilNormalForm::PencilNormalForm(const FieldSpec& field, std::vector<Pair> pairs, Matrix p, Matrix b,
                                   Embedding ext)
    : field_(&field), pairs_(std::move(pairs)), p_(std::move(p)), b_(std::move(b)), extension_(std::move(ext)) {}

PencilNormalForm PencilNormalForm::from_pairs(const FieldSpec& field, std::vector<Pair> pairs) {
  if (pairs.size() < 2) throw Error(ErrorKind::InvalidInput, "a normal form needs at least two pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (&pairs[i].first.field() != &field || &pairs[i].second.field() != &field) {
      throw Error(ErrorKind::FieldMismatch, "pair coefficient from another field");
    }
    if (pairs[i].first.is_zero()) throw Error(ErrorKind::InvalidInput, "normal-form pair with a_i = 0");
    for (std::size_t j = 0; j < i; ++j) {
      if ((pairs[i].first * pairs[j].second + pairs[j].first * pairs[i].second).is_zero()) {
        throw Error(ErrorKind::InvalidInput, "normal-form pairs " + std::to_string(j) + " and " +
                                                 std::to_string(i) + " define the same point");
      }
    }
  }
  const std::size_t n = 2 * pairs.size();
  return PencilNormalForm(field, std::move(pairs), Matrix::identity(field, n), Matrix::identity(field, 2),
                          Embedding(field));
}

QuadraticForm PencilNormalForm::f() const {
  QuadraticForm out(*field_, n());
  for (std::size_t i = 0; i <= M(); ++i) out.set(x_var(i), y_var(i), a(i));
  return out;
}

QuadraticForm PencilNormalForm::g() const {
  const FieldElement one = FieldElement::one(*field_);
  QuadraticForm out(*field_, n());
  for (std::size_t i = 0; i <= M(); ++i) {
    out.set(x_var(i), y_var(i), b(i));
    out.set(x_var(i), x_var(i), one);
    out.set(y_var(i), y_var(i), one);
  }
  return out;
}

Pencil PencilNormalForm::pencil() const { return Pencil(f(), g()); }

std::vector<P1Point> PencilNormalForm::points() const {
  std::vector<P1Point> out;
  for (const auto& [a, b] : pairs_) out.push_back(P1Point::make(a, b));
  return out;
}

PencilNormalForm PencilNormalForm::embedded(const Embedding& e) const {
  if (&e.from() != field_) throw Error(ErrorKind::FieldMismatch, "embedding does not start at the normal form's field");
  std::vector<Pair> pairs;
  for (const auto& p : pairs_) pairs.push_back(embed_pair(e, p));
  return PencilNormalForm(e.to(), std::move(pairs), embed(e, p_), embed(e, b_), extension_.then(e));
}

P1Point point_after_basis_change(const Matrix& g, const P1Point& pt) {
  if (g.rows() != 2 || g.cols() != 2) throw Error(ErrorKind::InvalidInput, "pencil basis change must be 2x2");
  // a g' + b f' = (a G10 + b G00) f + (a G11 + b G01) g, so the old point is
  // H (a, b) with H = [[G11, G01], [G10, G00]]; invert H.
  const FieldElement h00 = g(1, 1), h01 = g(0, 1), h10 = g(1, 0), h11 = g(0, 0);
  const FieldElement d = h00 * h11 + h01 * h10;
  if (d.is_zero()) throw Error(ErrorKind::InvalidInput, "pencil basis change is singular");
  return P1Point::make(h11 * pt.s + h01 * pt.t, h10 * pt.s + h00 * pt.t);
}

SingularLocusReport singular_members(const Pencil& p, bool allow_extend) {
  const Embedding ext = splitting_extension(p, allow_extend);
  return {ext, members_over(embed(ext, p)), {}};
}

PencilNormalForm normalize_pencil(const Pencil& input, bool allow_extend) {
  Embedding ext = splitting_extension(input, allow_extend);
  for (;;) {
    try {
      const FieldSpec& field = ext.to();
      const Pencil p = embed(ext, input);
      const auto members = members_over(p);

      // First basis member: f + lambda g for the smallest lambda, then g
      // itself, that splits on every kernel plane.
      std::optional<Matrix> basis;
      for (std::uint64_t bits = 0; bits <= field.size() && !basis; ++bits) {
        Matrix cand = Matrix::identity(field, 2);
        if (bits < field.size()) {
          cand(0, 1) = FieldElement(field, bits);
        } else {
          cand = Matrix(field, {{FieldElement::zero(field), FieldElement::one(field)},
                                {FieldElement::one(field), FieldElement::zero(field)}});
        }
        const QuadraticForm first = p.member(cand(0, 0), cand(0, 1));
        const Matrix af = polar_form(first);
        if (std::all_of(members.begin(), members.end(),
                        [&](const SingularMember& m) { return splits_on_plane(first, af, m.plane); })) {
          basis = cand;
        }
      }
      if (!basis) throw NeedExtension{2};
      const Matrix& bm = *basis;
      const QuadraticForm f = p.member(bm(0, 0), bm(0, 1));
      const QuadraticForm g = p.member(bm(1, 0), bm(1, 1));
      const Matrix af = polar_form(f);
      const Matrix ag = polar_form(g);

      std::vector<PlaneBasis> blocks;
      for (std::size_t i = 0; i < members.size(); ++i) {
        blocks.push_back(normalize_plane(f, g, af, ag, members[i].plane, i));
      }
      std::stable_sort(blocks.begin(), blocks.end(), [](const PlaneBasis& x, const PlaneBasis& y) {
        return x.a.bits() != y.a.bits() ? x.a.bits() < y.a.bits() : x.b.bits() < y.b.bits();
      });

      const std::size_t n = input.n();
      const std::size_t pairs = blocks.size();
      Matrix pm(field, n, n);
      std::vector<PencilNormalForm::Pair> pair_list;
      for (std::size_t i = 0; i < pairs; ++i) {
        for (std::size_t r = 0; r < n; ++r) {
          pm(r, i) = blocks[i].x[r];
          pm(r, pairs + i) = blocks[i].y[r];
        }
        pair_list.push_back(pair_of(blocks[i]));
      }
      PencilNormalForm nf(field, std::move(pair_list), std::move(pm), bm, ext);

      // The coordinate change must reproduce the normal form exactly.
      const QuadraticForm fp = substitute(p.f(), nf.P());
      const QuadraticForm gp = substitute(p.g(), nf.P());
      if (fp * bm(0, 0) + gp * bm(0, 1) != nf.f() || fp * bm(1, 0) + gp * bm(1, 1) != nf.g()) {
        throw Error(ErrorKind::VerificationFailure, "normal-form coordinate change does not reproduce the normal form");
      }
      return nf;
    } catch (const NeedExtension& need) {
      const unsigned total = ext.degree() * need.degree;
      if (!allow_extend) {
        throw FieldTooSmall(total, "normal form needs a degree-" + std::to_string(total) + " extension");
      }
      ext = ext.then(extend_field(ext.to(), need.degree));
    }
  }
}

SingularLocusReport singular_locus(const PencilNormalForm& nf) {
  SingularLocusReport report{nf.extension(), {}, {}};
  const QuadraticForm f = nf.f();
  const QuadraticForm g = nf.g();
  const FieldSpec& field = nf.field();
  for (std::size_t i = 0; i <= nf.M(); ++i) {
    QuadraticForm h = g * nf.a(i) + f * nf.b(i);
    std::array<Vector, 2> plane{unit_vector(field, nf.n(), nf.x_var(i)), unit_vector(field, nf.n(), nf.y_var(i))};
    const Matrix ah = polar_form(h);
    if (rank(ah) != nf.n() - 2 || !(ah * plane[0] == zero_vector(field, nf.n())) ||
        !(ah * plane[1] == zero_vector(field, nf.n()))) {
      throw Error(ErrorKind::VerificationFailure, "normal-form member has an unexpected kernel");
    }
    report.members.push_back({P1Point::make(nf.a(i), nf.b(i)), nf.a(i), nf.b(i), std::move(h), std::move(plane)});
    const std::string xi = "x" + std::to_string(i);
    const std::string yi = "y" + std::to_string(i);
    report.components.push_back({i, nf.x_var(i), nf.y_var(i),
                                 "x_j = y_j = 0 for j != " + std::to_string(i) + ", (" + xi + " + " + yi + ")^2 = 0"});
  }
  return report;
}

}  // namespace c2pencil
