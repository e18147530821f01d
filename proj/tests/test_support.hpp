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

// Random generators and conversions shared by the unit tests.

#pragma once

#include <random>

#include "c2pencil/exactla.hpp"
#include "c2pencil/pencil.hpp"
#include "oracles.hpp"

namespace testing_support {

using namespace c2pencil;

inline const FieldSpec& gf(unsigned m) { return FieldSpec::canonical(m); }

inline FieldElement el(const FieldSpec& f, std::uint64_t bits) { return FieldElement(f, bits); }

inline FieldElement random_element(const FieldSpec& f, std::mt19937_64& rng) {
  return FieldElement(f, rng() % f.size());
}

inline FieldElement random_nonzero(const FieldSpec& f, std::mt19937_64& rng) {
  return FieldElement(f, 1 + rng() % (f.size() - 1));
}

inline Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_element(f, rng);
  }
  return m;
}

inline Matrix random_invertible(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (!det(m).is_zero()) return m;
  }
}

inline Matrix random_alternating(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_element(f, rng);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

inline QuadraticForm random_form(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  QuadraticForm q(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) q.set(i, j, random_element(f, rng));
  }
  return q;
}

inline Vector random_vector(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(random_element(f, rng));
  return v;
}

inline oracle::Mat to_oracle(const Matrix& m) {
  oracle::Mat out(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).bits();
  }
  return out;
}

}  // namespace testing_support
