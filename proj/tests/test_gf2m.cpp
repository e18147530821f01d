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

#include <random>
#include <set>

#include "c2pencil/gf2m.hpp"
#include "c2pencil/poly.hpp"
#include "oracles.hpp"

using namespace c2pencil;

namespace {

const FieldSpec& gf(unsigned m) { return FieldSpec::canonical(m); }

FieldElement random_element(const FieldSpec& f, std::mt19937_64& rng) {
  return FieldElement(f, rng() % f.size());
}

}  // namespace

TEST(FieldSpecTest, CanonicalModuliAreSmallestIrreducible) {
  EXPECT_EQ(gf(1).modulus(), 0x2u);
  EXPECT_EQ(gf(2).modulus(), 0x7u);
  EXPECT_EQ(gf(3).modulus(), 0xBu);
  EXPECT_EQ(gf(4).modulus(), 0x13u);
  EXPECT_EQ(gf(8).modulus(), 0x11Bu);
  for (unsigned m = 2; m <= 10; ++m) {
    for (std::uint64_t p = (std::uint64_t{1} << m); p < gf(m).modulus(); ++p) {
      EXPECT_FALSE(is_irreducible_gf2(p)) << to_hex(p);
    }
  }
}

TEST(FieldSpecTest, ParseAndPrintRoundTrip) {
  const FieldSpec& f = FieldSpec::parse("F2^8/0x11b");
  EXPECT_EQ(&f, &gf(8));
  EXPECT_EQ(f.str(), "F2^8/0x11b");
  EXPECT_THROW(FieldSpec::parse("F2^2/0x5"), Error);   // reducible
  EXPECT_THROW(FieldSpec::parse("F2^3/0x7"), Error);   // wrong degree
  EXPECT_THROW(FieldSpec::parse("GF(4)"), Error);
  EXPECT_THROW(FieldSpec::get(33, 0), Error);
}

TEST(FieldElementTest, SmallProducts) {
  const FieldSpec& f4 = gf(2);
  EXPECT_EQ((FieldElement(f4, 2) * FieldElement(f4, 2)).bits(), 3u);
  for (std::uint64_t x = 0; x < 4; ++x) {
    EXPECT_EQ((FieldElement::one(f4) * FieldElement(f4, x)).bits(), x);
  }
  const FieldSpec& f8 = gf(3);
  EXPECT_EQ((FieldElement(f8, 2) * FieldElement(f8, 7)).bits(),
            oracle::schoolbook_mul(2, 7, f8.modulus()));
}

TEST(FieldElementTest, MultiplicationMatchesSchoolbook) {
  std::mt19937_64 rng(1);
  for (unsigned m : {1u, 2u, 3u, 5u, 8u, 13u, 16u, 24u, 31u, 32u}) {
    const FieldSpec& f = gf(m);
    for (int k = 0; k < 300; ++k) {
      const auto a = random_element(f, rng);
      const auto b = random_element(f, rng);
      ASSERT_EQ((a * b).bits(), oracle::schoolbook_mul(a.bits(), b.bits(), f.modulus())) << m;
    }
  }
}

TEST(FieldElementTest, InverseMatchesScan) {
  EXPECT_EQ(FieldElement(gf(2), 2).inverse().bits(), 3u);
  EXPECT_EQ(FieldElement::one(gf(5)).inverse().bits(), 1u);
  EXPECT_THROW(FieldElement::zero(gf(3)).inverse(), Error);
  for (unsigned m = 1; m <= 8; ++m) {
    const FieldSpec& f = gf(m);
    for (std::uint64_t x = 1; x < f.size(); ++x) {
      ASSERT_EQ(FieldElement(f, x).inverse().bits(), oracle::scan_inverse(x, f.modulus()));
    }
  }
}

TEST(FieldElementTest, FieldAxiomsOnRandomSamples) {
  std::mt19937_64 rng(2);
  for (unsigned m : {2u, 3u, 8u, 10u, 20u, 32u}) {
    const FieldSpec& f = gf(m);
    for (int k = 0; k < 200; ++k) {
      const auto a = random_element(f, rng);
      const auto b = random_element(f, rng);
      const auto c = random_element(f, rng);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a + b).square(), a.square() + b.square());
      if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(FieldElementTest, MismatchedFieldsThrow) {
  EXPECT_THROW(FieldElement(gf(2), 1) * FieldElement(gf(3), 1), Error);
  EXPECT_THROW(FieldElement(gf(2), 4), Error);
}

TEST(FieldElementTest, SqrtInvertsFrobenius) {
  EXPECT_EQ(FieldElement(gf(2), 2).sqrt().bits(), 3u);
  for (unsigned m = 1; m <= 8; ++m) {
    const FieldSpec& f = gf(m);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      const FieldElement e(f, x);
      ASSERT_EQ(e.square().sqrt(), e);
      ASSERT_EQ(e.sqrt().square(), e);
    }
  }
}

TEST(FieldElementTest, TraceMatchesPowerSum) {
  EXPECT_EQ(FieldElement(gf(2), 2).trace(), 1u);
  for (unsigned m = 1; m <= 8; ++m) {
    const FieldSpec& f = gf(m);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      const FieldElement e(f, x);
      ASSERT_EQ(e.trace(), oracle::power_sum_trace(x, f.modulus()));
      ASSERT_EQ((e.square() + e).trace(), 0u);
    }
  }
}

TEST(SolveQuadraticTest, SmallCases) {
  const FieldSpec& f4 = gf(2);
  const FieldElement one = FieldElement::one(f4);
  EXPECT_FALSE(solve_quadratic(one, FieldElement(f4, 2)).has_value());
  const auto r = solve_quadratic(one, one);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->first.bits(), 2u);
  EXPECT_EQ(r->second.bits(), 3u);
  const auto s = solve_quadratic(FieldElement::zero(f4), FieldElement(f4, 2));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->first, s->second);
  EXPECT_EQ(s->first.bits(), 3u);
}

TEST(SolveQuadraticTest, ExhaustiveAgainstScan) {
  for (unsigned m = 1; m <= 6; ++m) {
    const FieldSpec& f = gf(m);
    for (std::uint64_t b = 0; b < f.size(); ++b) {
      for (std::uint64_t c = 0; c < f.size(); ++c) {
        const FieldElement B(f, b), C(f, c);
        std::set<std::uint64_t> roots;
        for (std::uint64_t t = 0; t < f.size(); ++t) {
          const FieldElement T(f, t);
          if ((T * T + B * T + C).is_zero()) roots.insert(t);
        }
        const auto got = solve_quadratic(B, C);
        ASSERT_EQ(got.has_value(), !roots.empty()) << m << " " << b << " " << c;
        if (!got) continue;
        ASSERT_EQ(roots.count(got->first.bits()), 1u);
        ASSERT_EQ(roots.count(got->second.bits()), 1u);
        ASSERT_LE(got->first.bits(), got->second.bits());
        if (b != 0) ASSERT_EQ((C / (B * B)).trace(), 0u);
      }
    }
  }
}

TEST(SolveQuadraticTest, LargeFieldsSatisfyEquation) {
  std::mt19937_64 rng(3);
  for (unsigned m : {10u, 16u, 17u, 32u}) {
    const FieldSpec& f = gf(m);
    for (int k = 0; k < 200; ++k) {
      const auto b = random_element(f, rng);
      const auto c = random_element(f, rng);
      const auto got = solve_quadratic(b, c);
      if (!b.is_zero()) ASSERT_EQ(got.has_value(), (c / (b * b)).trace() == 0);
      if (!got) continue;
      for (const auto& r : {got->first, got->second}) ASSERT_TRUE((r * r + b * r + c).is_zero());
    }
  }
}

TEST(EmbeddingTest, RingHomomorphism) {
  std::mt19937_64 rng(4);
  for (auto [m, d] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {8u, 2u}, {4u, 4u}}) {
    const FieldSpec& f = gf(m);
    const Embedding e = extend_field(f, d);
    EXPECT_EQ(e.to().degree(), m * d);
    EXPECT_EQ(&e.to(), &gf(m * d));
    EXPECT_TRUE(e(FieldElement::zero(f)).is_zero());
    EXPECT_TRUE(e(FieldElement::one(f)).is_one());
    for (int k = 0; k < 100; ++k) {
      const auto x = random_element(f, rng);
      const auto y = random_element(f, rng);
      ASSERT_EQ(e(x * y), e(x) * e(y));
      ASSERT_EQ(e(x + y), e(x) + e(y));
      ASSERT_EQ(e(x.square()), e(x).square());
      const auto back = e.preimage(e(x));
      ASSERT_TRUE(back.has_value());
      ASSERT_EQ(*back, x);
    }
  }
}

TEST(EmbeddingTest, CubeRootOfUnityKeepsOrder) {
  const Embedding e = extend_field(gf(2), 2);
  EXPECT_EQ(multiplicative_order(e(FieldElement(gf(2), 2))), 3u);
  // Elements outside the image have no preimage.
  int outside = 0;
  for (std::uint64_t x = 0; x < 16; ++x) {
    if (!e.preimage(FieldElement(gf(4), x))) ++outside;
  }
  EXPECT_EQ(outside, 12);
}

TEST(EmbeddingTest, CompositionAgreesWithDirectEmbedding) {
  std::mt19937_64 rng(5);
  const Embedding a = extend_field(gf(2), 2);
  const Embedding b = extend_field(gf(4), 2);
  const Embedding ab = a.then(b);
  EXPECT_EQ(&ab.to(), &gf(8));
  for (int k = 0; k < 4; ++k) {
    const FieldElement x(gf(2), static_cast<std::uint64_t>(k));
    EXPECT_EQ(ab(x), b(a(x)));
  }
  const FieldElement x = random_element(gf(2), rng);
  EXPECT_EQ(ab(x * x), ab(x) * ab(x));
}

TEST(TruncatedElementTest, DualNumberRing) {
  const FieldSpec& f = gf(1);
  const TruncatedElement one_plus_eps({FieldElement::one(f), FieldElement::one(f)});
  EXPECT_EQ(one_plus_eps * one_plus_eps, TruncatedElement::constant(FieldElement::one(f), 2));
  const TruncatedElement eps({FieldElement::zero(f), FieldElement::one(f)});
  EXPECT_FALSE(eps.is_unit());
  EXPECT_TRUE((eps * eps).is_zero());
  EXPECT_THROW(eps.inverse(), Error);
}

TEST(TruncatedElementTest, UnitsAreExactlyNonzeroConstantTerm) {
  const FieldSpec& f = gf(2);
  const unsigned n = 3;
  for (std::uint64_t code = 0; code < 64; ++code) {
    std::vector<FieldElement> c;
    for (unsigned j = 0; j < n; ++j) c.emplace_back(f, (code >> (2 * j)) & 3);
    const TruncatedElement a(c);
    bool has_inverse = false;
    for (std::uint64_t other = 0; other < 64 && !has_inverse; ++other) {
      std::vector<FieldElement> d;
      for (unsigned j = 0; j < n; ++j) d.emplace_back(f, (other >> (2 * j)) & 3);
      has_inverse = a * TruncatedElement(d) == TruncatedElement::constant(FieldElement::one(f), n);
    }
    ASSERT_EQ(has_inverse, a.is_unit());
    if (a.is_unit()) ASSERT_EQ(a * a.inverse(), TruncatedElement::constant(FieldElement::one(f), n));
  }
}
