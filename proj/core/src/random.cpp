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

#include "c2pencil/random.hpp"

#include <algorithm>
#include <set>

namespace c2pencil {

Matrix Sampler::matrix(const FieldSpec& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = element(f);
  }
  return m;
}

Matrix Sampler::invertible(const FieldSpec& f, std::size_t n) {
  for (;;) {
    Matrix m = matrix(f, n, n);
    if (!det(m).is_zero()) return m;
  }
}

PencilNormalForm Sampler::normal_form(const FieldSpec& f, std::size_t M) {
  if (f.size() < M + 1) throw Error(ErrorKind::InvalidInput, "field has fewer than M+1 elements");
  std::set<std::uint64_t> used;
  std::vector<PencilNormalForm::Pair> pairs;
  while (pairs.size() < M + 1) {
    const FieldElement t = element(f);
    if (!used.insert(t.bits()).second) continue;
    const FieldElement r = nonzero(f);
    pairs.emplace_back(r, r * t);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    return x.first.bits() != y.first.bits() ? x.first.bits() < y.first.bits() : x.second.bits() < y.second.bits();
  });
  return PencilNormalForm::from_pairs(f, std::move(pairs));
}

Pencil transform_pencil(const Pencil& p, const Matrix& s, const Matrix& g) {
  const QuadraticForm fs = substitute(p.f(), s);
  const QuadraticForm gs = substitute(p.g(), s);
  return Pencil(fs * g(0, 0) + gs * g(0, 1), fs * g(1, 0) + gs * g(1, 1));
}

DisguisedPencil disguise(const Pencil& p, Sampler& sampler) {
  Matrix s = sampler.invertible(p.field(), p.n());
  Matrix g = sampler.invertible(p.field(), 2);
  Pencil out = transform_pencil(p, s, g);
  return {std::move(out), std::move(s), std::move(g)};
}

}  // namespace c2pencil
