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
 * @file random.hpp
 * @brief Seeded sampling of field elements, matrices and normal-form pencils.
 *
 * Every draw comes from one std::mt19937_64 stream reduced modulo the range,
 * so a seed fixes all outputs bit for bit on every platform.
 */

#pragma once

#include <cstdint>
#include <random>

#include "c2pencil/pencil.hpp"

namespace c2pencil {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw from [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  FieldElement element(const FieldSpec& f) { return FieldElement(f, below(f.size())); }
  FieldElement nonzero(const FieldSpec& f) { return FieldElement(f, 1 + below(f.size() - 1)); }
  Matrix matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  Matrix invertible(const FieldSpec& f, std::size_t n);

  /// Normal form with M+1 distinct points [1 : t_i] and random scalings
  /// (a_i, b_i) = (r_i, r_i t_i), pairs sorted by bit encoding. Needs
  /// 2^m >= M+1.
  PencilNormalForm normal_form(const FieldSpec& f, std::size_t M);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// A pencil [f'; g'] = G [f o S; g o S] together with the hidden S and G.
struct DisguisedPencil {
  Pencil pencil;
  Matrix coordinates;  // S
  Matrix basis;        // G
};

DisguisedPencil disguise(const Pencil& p, Sampler& sampler);

/// [f'; g'] = G [f o S; g o S].
Pencil transform_pencil(const Pencil& p, const Matrix& s, const Matrix& g);

}  // namespace c2pencil
