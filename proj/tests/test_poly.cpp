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

#include <map>
#include <random>

#include "c2pencil/poly.hpp"

using namespace c2pencil;

namespace {

const FieldSpec& gf(unsigned m) { return FieldSpec::canonical(m); }

FieldElement el(const FieldSpec& f, std::uint64_t bits) { return FieldElement(f, bits); }

UniPoly product_of_roots(const FieldSpec& f, const std::vector<std::uint64_t>& roots) {
  UniPoly p = UniPoly::constant(FieldElement::one(f));
  for (auto r : roots) p = p * UniPoly::linear_root(el(f, r));
  return p;
}

BinaryForm random_form(const FieldSpec& f, unsigned d, std::mt19937_64& rng) {
  std::vector<FieldElement> c;
  for (unsigned j = 0; j <= d; ++j) c.push_back(el(f, rng() % f.size()));
  return BinaryForm(f, c);
}

}  // namespace

TEST(UniPolyTest, DivisionIdentity) {
  std::mt19937_64 rng(10);
  const FieldSpec& f = gf(5);
  for (int k = 0; k < 100; ++k) {
    std::vector<FieldElement> a, b;
    for (int j = 0; j < 9; ++j) a.push_back(el(f, rng() % 32));
    for (int j = 0; j < 4; ++j) b.push_back(el(f, rng() % 32));
    b.push_back(FieldElement::one(f));
    const UniPoly pa(f, a), pb(f, b);
    auto [q, r] = pa.divmod(pb);
    ASSERT_EQ(q * pb + r, pa);
    ASSERT_LT(r.degree(), pb.degree());
  }
  EXPECT_THROW(UniPoly::constant(FieldElement::one(f)).divmod(UniPoly(f)), Error);
}

TEST(UniPolyTest, GcdOfProducts) {
  const FieldSpec& f = gf(4);
  const UniPoly a = product_of_roots(f, {1, 2, 3, 7});
  const UniPoly b = product_of_roots(f, {2, 7, 9});
  EXPECT_EQ(gcd(a, b), product_of_roots(f, {2, 7}));
}

TEST(FindRootsTest, ConstructedProducts) {
  const FieldSpec& f = gf(4);
  auto roots = find_roots(product_of_roots(f, {3, 5}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].value.bits(), 3u);
  EXPECT_EQ(roots[1].value.bits(), 5u);
  EXPECT_EQ(roots[0].multiplicity, 1u);

  roots = find_roots(product_of_roots(f, {6, 6}));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].multiplicity, 2u);

  const FieldSpec& f4 = gf(2);
  const UniPoly irreducible(f4, {el(f4, 2), el(f4, 1), el(f4, 1)});
  EXPECT_TRUE(find_roots(irreducible).empty());
  EXPECT_THROW(find_roots(UniPoly(f4)), Error);
}

TEST(FindRootsTest, FactorizationRouteAgreesWithScan) {
  std::mt19937_64 rng(11);
  for (unsigned m : {3u, 6u, 9u}) {
    const FieldSpec& f = gf(m);
    for (int k = 0; k < 40; ++k) {
      std::vector<FieldElement> c;
      const int d = 1 + static_cast<int>(rng() % 7);
      for (int j = 0; j < d; ++j) c.push_back(el(f, rng() % f.size()));
      c.push_back(FieldElement::one(f));
      UniPoly p(f, c);
      // Plant a few rational roots, one of them doubled.
      p = p * product_of_roots(f, {rng() % f.size(), rng() % f.size()});
      const auto a = find_roots(p);
      const auto b = find_roots_by_factorization(p);
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_EQ(a[i].value, b[i].value);
        ASSERT_EQ(a[i].multiplicity, b[i].multiplicity);
      }
    }
  }
}

TEST(FindRootsTest, LargeFieldPlantedRoots) {
  std::mt19937_64 rng(12);
  const FieldSpec& f = gf(24);
  std::vector<std::uint64_t> planted;
  for (int j = 0; j < 6; ++j) planted.push_back(rng() % f.size());
  std::sort(planted.begin(), planted.end());
  const auto roots = find_roots(product_of_roots(f, planted));
  ASSERT_EQ(roots.size(), planted.size());
  for (std::size_t j = 0; j < planted.size(); ++j) EXPECT_EQ(roots[j].value.bits(), planted[j]);
}

TEST(SplittingDegreeTest, IrreducibleAndMixedFactors) {
  const FieldSpec& f4 = gf(2);
  const UniPoly irreducible(f4, {el(f4, 2), el(f4, 1), el(f4, 1)});
  EXPECT_EQ(splitting_degree(irreducible), 2u);
  EXPECT_EQ(splitting_degree(irreducible * irreducible), 2u);
  const FieldSpec& f2 = gf(1);
  // x^3 + x + 1 is irreducible over GF(2); with x^2 + x + 1 the lcm is 6.
  const UniPoly cubic(f2, {el(f2, 1), el(f2, 1), el(f2, 0), el(f2, 1)});
  const UniPoly quad(f2, {el(f2, 1), el(f2, 1), el(f2, 1)});
  EXPECT_EQ(splitting_degree(cubic * quad), 6u);
  EXPECT_EQ(distinct_degree_factor_degrees(cubic * quad * UniPoly::linear_root(el(f2, 1))),
            (std::vector<unsigned>{1, 2, 3}));
  EXPECT_EQ(splitting_degree(product_of_roots(f4, {1, 2, 3})), 1u);
}

TEST(BinaryFormTest, RootsOfSimpleForms) {
  const FieldSpec& f = gf(2);
  const BinaryForm st(f, {el(f, 0), el(f, 1), el(f, 0)});
  const auto r = binary_form_roots(st);
  EXPECT_TRUE(r.split);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(r.roots[0].point, P1Point::make(el(f, 0), el(f, 1)));
  EXPECT_EQ(r.roots[1].point, P1Point::make(el(f, 1), el(f, 0)));
}

TEST(BinaryFormTest, IrreducibleQuadraticIsNotSplit) {
  const FieldSpec& f = gf(2);
  const BinaryForm q(f, {el(f, 1), el(f, 1), el(f, 2)});  // s^2 + st + a t^2
  int zeros = 0;
  for (std::uint64_t t = 0; t < 4; ++t) {
    if (q(FieldElement::one(f), el(f, t)).is_zero()) ++zeros;
  }
  if (q(FieldElement::zero(f), FieldElement::one(f)).is_zero()) ++zeros;
  EXPECT_EQ(zeros, 0);
  const auto r = binary_form_roots(q);
  EXPECT_FALSE(r.split);
  EXPECT_TRUE(r.roots.empty());
  EXPECT_EQ(splitting_degree(q), 2u);
}

TEST(BinaryFormTest, RootProductDividesForm) {
  std::mt19937_64 rng(13);
  for (unsigned m : {2u, 3u}) {
    const FieldSpec& f = gf(m);
    for (int k = 0; k < 200; ++k) {
      const unsigned d = 1 + static_cast<unsigned>(rng() % 6);
      BinaryForm p = random_form(f, d, rng);
      if (p.is_zero()) continue;
      const auto r = binary_form_roots(p);
      BinaryForm prod(f, {FieldElement::one(f)});
      for (const auto& root : r.roots) {
        for (unsigned e = 0; e < root.multiplicity; ++e) {
          prod = prod * BinaryForm::linear(root.point.t, root.point.s);  // t_r s + s_r t
        }
      }
      // prod vanishes exactly at the returned points; check divisibility by
      // dehomogenized comparison of root multisets.
      for (const auto& root : r.roots) ASSERT_TRUE(p(root.point.s, root.point.t).is_zero());
      if (r.split) ASSERT_TRUE(prod.equal_up_to_scalar(p));
      ASSERT_EQ(prod.degree() <= p.degree(), true);
    }
  }
}

TEST(SquarefreeTest, SimpleCases) {
  const FieldSpec& f = gf(2);
  const BinaryForm s = BinaryForm::linear(FieldElement::one(f), FieldElement::zero(f));
  const BinaryForm t = BinaryForm::linear(FieldElement::zero(f), FieldElement::one(f));
  const BinaryForm s_plus_t = BinaryForm::linear(FieldElement::one(f), FieldElement::one(f));
  EXPECT_TRUE(squarefree_check(s * t * s_plus_t));
  EXPECT_FALSE(squarefree_check(s * s * t));
  EXPECT_FALSE(squarefree_check(t * t * s));
  const BinaryForm q(f, {el(f, 1), el(f, 1), el(f, 2)});
  EXPECT_TRUE(squarefree_check(q * t));
  EXPECT_FALSE(squarefree_check(q * q));
}

TEST(SquarefreeTest, AgreesWithSplittingInExtension) {
  std::mt19937_64 rng(14);
  for (unsigned m : {2u, 3u}) {
    const FieldSpec& f = gf(m);
    for (int k = 0; k < 150; ++k) {
      const unsigned d = 1 + static_cast<unsigned>(rng() % 6);
      BinaryForm p = random_form(f, d, rng);
      if (p.is_zero()) continue;
      // Half of the samples get a planted square factor.
      if (k % 2 == 0 && d <= 4) {
        const BinaryForm l = random_form(f, 1, rng);
        if (!l.is_zero()) p = p * l * l;
      }
      const unsigned ext = splitting_degree(p);
      const Embedding e = ext == 1 ? Embedding(f) : extend_field(f, ext);
      const auto split = binary_form_roots(embed(e, p));
      ASSERT_TRUE(split.split);
      bool all_simple = true;
      for (const auto& r : split.roots) all_simple = all_simple && r.multiplicity == 1;
      ASSERT_EQ(squarefree_check(p), all_simple) << k;
    }
  }
}
