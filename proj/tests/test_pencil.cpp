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

#include <gtest/gtest.h>

#include <algorithm>

#include "c2pencil/random.hpp"
#include "test_support.hpp"

using namespace c2pencil;
using namespace testing_support;

namespace {

BinaryForm product_of_linear_factors(const PencilNormalForm& nf) {
  BinaryForm prod(nf.field(), {FieldElement::one(nf.field())});
  for (const auto& [a, b] : nf.pairs()) prod = prod * BinaryForm::linear(a, b);
  return prod;
}

PencilNormalForm example_nonliftable() {
  const FieldSpec& f = gf(2);
  const FieldElement one = el(f, 1), zero = el(f, 0), a = el(f, 2);
  return PencilNormalForm::from_pairs(f, {{one, zero}, {one, one}, {one, a}, {a, one}});
}

std::vector<P1Point> sorted_points(std::vector<P1Point> pts) {
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

TEST(PolarFormTest, SquaresVanishAndCrossTermsAppear) {
  const FieldSpec& f = gf(2);
  QuadraticForm sq(f, 2);
  sq.set(0, 0, el(f, 1));
  EXPECT_TRUE(polar_form(sq).is_zero());
  QuadraticForm xy(f, 2);
  xy.set(0, 1, el(f, 1));
  EXPECT_EQ(polar_form(xy), Matrix(f, {{el(f, 0), el(f, 1)}, {el(f, 1), el(f, 0)}}));
}

TEST(PolarFormTest, MatchesDirectEvaluation) {
  std::mt19937_64 rng(30);
  const FieldSpec& f = gf(5);
  for (int k = 0; k < 50; ++k) {
    const QuadraticForm q = random_form(f, 6, rng);
    const Vector u = random_vector(f, 6, rng), v = random_vector(f, 6, rng);
    Vector uv(6, el(f, 0));
    for (int i = 0; i < 6; ++i) uv[i] = u[i] + v[i];
    ASSERT_EQ(pairing(polar_form(q), u, v), q(uv) + q(u) + q(v));
    ASSERT_TRUE(polar_form(q).is_alternating());
  }
}

TEST(SubstituteTest, IdentityAndSwap) {
  std::mt19937_64 rng(31);
  const FieldSpec& f = gf(3);
  const QuadraticForm q = random_form(f, 6, rng);
  EXPECT_EQ(substitute(q, Matrix::identity(f, 6)), q);
  const PencilNormalForm nf = PencilNormalForm::from_pairs(f, {{el(f, 1), el(f, 2)}, {el(f, 3), el(f, 1)}, {el(f, 5), el(f, 0)}});
  Matrix swap = Matrix::identity(f, 6);
  swap(0, 0) = swap(3, 3) = el(f, 0);
  swap(0, 3) = swap(3, 0) = el(f, 1);
  EXPECT_EQ(substitute(nf.f(), swap), nf.f());
  EXPECT_EQ(substitute(nf.g(), swap), nf.g());
}

TEST(SubstituteTest, PointwiseOracleAndRightAction) {
  std::mt19937_64 rng(32);
  const FieldSpec& f = gf(4);
  for (int k = 0; k < 20; ++k) {
    const QuadraticForm q = random_form(f, 6, rng);
    const Matrix s = random_matrix(f, 6, 6, rng);
    const Matrix t = random_matrix(f, 6, 6, rng);
    const QuadraticForm qs = substitute(q, s);
    for (int p = 0; p < 20; ++p) {
      const Vector x = random_vector(f, 6, rng);
      ASSERT_EQ(qs(x), q(s * x));
    }
    ASSERT_EQ(substitute(qs, t), substitute(q, s * t));
  }
}

TEST(PencilTest, RejectsDependentMembers) {
  std::mt19937_64 rng(33);
  const FieldSpec& f = gf(2);
  const QuadraticForm q = random_form(f, 4, rng);
  EXPECT_THROW(Pencil(q, q * el(f, 2)), Error);
  EXPECT_THROW(Pencil(q, QuadraticForm(f, 4)), Error);
  EXPECT_THROW(Pencil(random_form(f, 5, rng), random_form(f, 5, rng)), Error);
}

TEST(PfaffianFormTest, NormalFormIsProductOfLinearForms) {
  Sampler sampler(34);
  for (unsigned m : {2u, 3u, 8u}) {
    for (std::size_t M = 1; M <= 4; ++M) {
      if ((std::size_t{1} << m) < M + 1) continue;
      const PencilNormalForm nf = sampler.normal_form(gf(m), M);
      ASSERT_TRUE(pfaffian_form(nf.pencil()).equal_up_to_scalar(product_of_linear_factors(nf)));
    }
  }
}

TEST(PfaffianFormTest, SquareEqualsDeterminantOfMember) {
  std::mt19937_64 rng(35);
  const FieldSpec& f = gf(8);
  for (int k = 0; k < 10; ++k) {
    const Pencil p(random_form(f, 6, rng), random_form(f, 6, rng));
    const BinaryForm pf = pfaffian_form(p);
    ASSERT_EQ(pf.degree(), 3u);
    for (int j = 0; j < 20; ++j) {
      const FieldElement s = random_element(f, rng), t = random_element(f, rng);
      const Matrix member = polar_form(p.member(s, t));
      ASSERT_EQ(pf(s, t).square().bits(), oracle::cofactor_det(to_oracle(member), f.modulus()));
      ASSERT_EQ(pf(s, t).bits(), oracle::matching_pfaffian(to_oracle(member), f.modulus()));
    }
  }
}

TEST(PfaffianFormTest, SmallFieldUsesExtensionNodes) {
  // Over GF(2) a cubic Pfaffian needs four interpolation nodes.
  std::mt19937_64 rng(36);
  const FieldSpec& f = gf(1);
  for (int k = 0; k < 20; ++k) {
    const QuadraticForm a = random_form(f, 6, rng), b = random_form(f, 6, rng);
    if (a.is_zero() || b.is_zero() || a == b) continue;
    const Pencil p(a, b);
    const BinaryForm pf = pfaffian_form(p);
    for (std::uint64_t s = 0; s < 2; ++s) {
      for (std::uint64_t t = 0; t < 2; ++t) {
        const Matrix member = polar_form(p.member(el(f, s), el(f, t)));
        ASSERT_EQ(pf(el(f, s), el(f, t)).bits(), oracle::matching_pfaffian(to_oracle(member), f.modulus()));
      }
    }
  }
}

TEST(PfaffianPointsTest, NonliftableExamplePoints) {
  const PencilNormalForm nf = example_nonliftable();
  const auto pts = pfaffian_points(nf.pencil());
  ASSERT_TRUE(pts.split);
  const FieldSpec& f = gf(2);
  const std::vector<P1Point> expected{P1Point::make(el(f, 1), el(f, 0)), P1Point::make(el(f, 1), el(f, 1)),
                                      P1Point::make(el(f, 1), el(f, 2)), P1Point::make(el(f, 2), el(f, 1))};
  std::vector<P1Point> got;
  for (const auto& r : pts.roots) {
    EXPECT_EQ(r.multiplicity, 1u);
    got.push_back(r.point);
  }
  EXPECT_EQ(got, sorted_points(expected));
}

TEST(SingularMembersTest, NormalFormPlanesAreCoordinatePairs) {
  Sampler sampler(37);
  const PencilNormalForm nf = sampler.normal_form(gf(3), 2);
  const SingularLocusReport rep = singular_members(nf.pencil());
  ASSERT_EQ(rep.members.size(), 3u);
  for (const auto& m : rep.members) {
    // Locate the pair this point belongs to.
    std::size_t i = 0;
    while (P1Point::make(nf.a(i), nf.b(i)) != m.point) ++i;
    ASSERT_LE(i, nf.M());
    const Matrix plane(nf.field(), {m.plane[0], m.plane[1]});
    const Matrix ah = polar_form(m.member);
    for (const auto& v : m.plane) ASSERT_EQ(ah * v, zero_vector(nf.field(), nf.n()));
    for (std::size_t c = 0; c < nf.n(); ++c) {
      if (c == nf.x_var(i) || c == nf.y_var(i)) continue;
      ASSERT_TRUE(plane(0, c).is_zero() && plane(1, c).is_zero());
    }
  }
}

TEST(SingularMembersTest, RootOfUnityPoints) {
  const FieldSpec& f = gf(2);
  const FieldElement a = el(f, 2);
  const PencilNormalForm nf = PencilNormalForm::from_pairs(f, {{el(f, 1), el(f, 1)}, {a, el(f, 1)}, {a * a, el(f, 1)}});
  const auto rep = singular_members(nf.pencil());
  std::vector<P1Point> got;
  for (const auto& m : rep.members) got.push_back(m.point);
  EXPECT_EQ(got, sorted_points({P1Point::make(el(f, 1), el(f, 1)), P1Point::make(a, el(f, 1)),
                                P1Point::make(a * a, el(f, 1))}));
}

TEST(SingularMembersTest, RepeatedRootsAreRejected) {
  const FieldSpec& f = gf(3);
  // Two pairs on the same point of P^1, bypassing the normal-form validation.
  QuadraticForm qf(f, 6), qg(f, 6);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs{{1, 2}, {2, 4}, {1, 5}};
  for (std::size_t i = 0; i < 3; ++i) {
    qf.set(i, 3 + i, el(f, pairs[i].first));
    qg.set(i, 3 + i, el(f, pairs[i].second));
    qg.set(i, i, el(f, 1));
    qg.set(3 + i, 3 + i, el(f, 1));
  }
  const Pencil p(qf, qg);
  try {
    singular_members(p);
    FAIL() << "expected RepeatedPfaffianRoots";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RepeatedPfaffianRoots);
  }
  EXPECT_THROW(normalize_pencil(p), Error);
}

TEST(SingularMembersTest, FieldTooSmallReportsDegree) {
  // Pf(s f + t g) = s^2 + s t + t^2, irreducible over GF(2).
  const FieldSpec& f = gf(1);
  const FieldElement one = el(f, 1);
  QuadraticForm qf(f, 4), qg(f, 4);
  qf.set(0, 2, one);
  qf.set(1, 3, one);
  qg.set(0, 2, one);
  qg.set(0, 3, one);
  qg.set(1, 2, one);
  for (std::size_t i = 0; i < 4; ++i) qg.set(i, i, one);
  const Pencil p(qf, qg);
  const BinaryForm pf = pfaffian_form(p);
  ASSERT_TRUE(squarefree_check(pf));
  ASSERT_EQ(splitting_degree(pf), 2u);
  try {
    singular_members(p);
    FAIL() << "expected FieldTooSmall";
  } catch (const FieldTooSmall& e) {
    EXPECT_EQ(e.required_degree(), 2u);
  }
  const auto rep = singular_members(p, true);
  EXPECT_EQ(rep.extension.to().degree(), 2u);
  EXPECT_EQ(rep.members.size(), 2u);
}

TEST(NormalizeTest, NormalFormIsFixedPoint) {
  Sampler sampler(38);
  for (std::size_t M = 1; M <= 4; ++M) {
    const PencilNormalForm nf = sampler.normal_form(gf(8), M);
    const PencilNormalForm again = normalize_pencil(nf.pencil());
    EXPECT_EQ(again.pairs(), nf.pairs());
    EXPECT_EQ(again.B(), Matrix::identity(nf.field(), 2));
    EXPECT_EQ(again.P(), Matrix::identity(nf.field(), nf.n()));
  }
}

TEST(NormalizeTest, CoordinateDisguiseRecoversPairsExactly) {
  // The pairs are invariants of (f, g) up to order when the pencil basis is
  // left alone.
  Sampler sampler(39);
  for (int k = 0; k < 20; ++k) {
    const std::size_t M = 1 + sampler.below(4);
    const PencilNormalForm nf = sampler.normal_form(gf(8), M);
    const Matrix s = sampler.invertible(nf.field(), nf.n());
    const Pencil hidden = transform_pencil(nf.pencil(), s, Matrix::identity(nf.field(), 2));
    const PencilNormalForm back = normalize_pencil(hidden);
    ASSERT_EQ(back.pairs(), nf.pairs());
    ASSERT_EQ(back.B(), Matrix::identity(nf.field(), 2));
  }
}

TEST(NormalizeTest, FullDisguiseRoundTrip) {
  Sampler sampler(40);
  for (int k = 0; k < 30; ++k) {
    const std::size_t M = 1 + sampler.below(4);
    const PencilNormalForm nf = sampler.normal_form(gf(8), M);
    const DisguisedPencil d = disguise(nf.pencil(), sampler);
    const PencilNormalForm back = normalize_pencil(d.pencil);
    // Expected points: originals moved through the hidden basis change and
    // then the recovered one.
    std::vector<P1Point> expected;
    const Matrix total = back.B() * d.basis;
    for (const auto& pt : nf.points()) expected.push_back(point_after_basis_change(total, pt));
    ASSERT_EQ(sorted_points(back.points()), sorted_points(expected));
    // Independent check of the coordinate change.
    const QuadraticForm fp = substitute(d.pencil.f(), back.P());
    const QuadraticForm gp = substitute(d.pencil.g(), back.P());
    ASSERT_EQ(fp * back.B()(0, 0) + gp * back.B()(0, 1), back.f());
    ASSERT_EQ(fp * back.B()(1, 0) + gp * back.B()(1, 1), back.g());
  }
}

TEST(NormalizeTest, SingularFGetsSheared) {
  const PencilNormalForm nf = example_nonliftable();
  // Swap the roles: the member over [1:0] becomes f.
  const FieldSpec& f = nf.field();
  Matrix swap(f, {{el(f, 0), el(f, 1)}, {el(f, 1), el(f, 0)}});
  const Pencil p = transform_pencil(nf.pencil(), Matrix::identity(f, nf.n()), swap);
  ASSERT_TRUE(pfaffian(polar_form(p.f())).is_zero());
  const PencilNormalForm back = normalize_pencil(p);
  EXPECT_FALSE(back.B()(0, 1).is_zero());
  for (const auto& [a, b] : back.pairs()) EXPECT_FALSE(a.is_zero());
}

TEST(NormalizeTest, NotSmoothWhenSquareCoefficientVanishes) {
  const FieldSpec& f = gf(3);
  QuadraticForm qf(f, 6), qg(f, 6);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs{{1, 2}, {1, 3}, {1, 5}};
  for (std::size_t i = 0; i < 3; ++i) {
    qf.set(i, 3 + i, el(f, pairs[i].first));
    qg.set(i, 3 + i, el(f, pairs[i].second));
    qg.set(i, i, el(f, 1));
    if (i != 1) qg.set(3 + i, 3 + i, el(f, 1));  // d_1 = 0
  }
  try {
    normalize_pencil(Pencil(qf, qg));
    FAIL() << "expected NotSmooth";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSmooth);
  }
}

TEST(NormalizeTest, IsotropicVectorsMayNeedQuadraticExtension) {
  // Over GF(2) the members are f, g (each singular on one plane) and f + g,
  // which is x^2 + xy + y^2 on both planes and has no rational isotropic
  // vector there.
  const FieldSpec& f = gf(1);
  const FieldElement one = el(f, 1);
  QuadraticForm qf(f, 4), qg(f, 4);
  qf.set(0, 0, one);
  qf.set(2, 2, one);
  qf.set(1, 3, one);
  qg.set(0, 2, one);
  qg.set(1, 1, one);
  qg.set(3, 3, one);
  const Pencil p(qf, qg);
  try {
    normalize_pencil(p);
    FAIL() << "expected FieldTooSmall";
  } catch (const FieldTooSmall& e) {
    EXPECT_EQ(e.required_degree(), 2u);
  }
  const PencilNormalForm nf = normalize_pencil(p, true);
  EXPECT_EQ(nf.field().degree(), 2u);
  EXPECT_EQ(nf.extension().degree(), 2u);
}

TEST(SingularLocusTest, ComponentsMatchMembers) {
  Sampler sampler(41);
  for (std::size_t M = 2; M <= 4; ++M) {
    const PencilNormalForm nf = sampler.normal_form(gf(8), M);
    const SingularLocusReport rep = singular_locus(nf);
    ASSERT_EQ(rep.components.size(), M + 1);
    ASSERT_EQ(rep.members.size(), M + 1);
    for (std::size_t i = 0; i <= M; ++i) {
      EXPECT_EQ(rep.members[i].point, P1Point::make(nf.a(i), nf.b(i)));
      EXPECT_EQ(rep.components[i].x_var, i);
      EXPECT_EQ(rep.components[i].y_var, M + 1 + i);
    }
    // Same points as the generic singular-member computation.
    std::vector<P1Point> generic;
    for (const auto& m : singular_members(nf.pencil()).members) generic.push_back(m.point);
    EXPECT_EQ(sorted_points(nf.points()), generic);
  }
}
