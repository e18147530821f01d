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

// Independent reference implementations used by the tests. They are slow and
// deliberately share no code with the library beyond the value types.

#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

/// Shift-and-add multiplication followed by long division by the modulus.
inline std::uint64_t schoolbook_mul(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  std::uint64_t prod = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1) prod ^= a << i;
  }
  int deg = 63;
  while (deg >= 0 && !((modulus >> deg) & 1)) --deg;
  for (int k = 63; k >= deg; --k) {
    if ((prod >> k) & 1) prod ^= modulus << (k - deg);
  }
  return prod;
}

inline std::uint64_t field_size(std::uint64_t modulus) {
  int deg = 63;
  while (!((modulus >> deg) & 1)) --deg;
  return std::uint64_t{1} << deg;
}

/// Inverse by scanning all nonzero elements.
inline std::uint64_t scan_inverse(std::uint64_t a, std::uint64_t modulus) {
  for (std::uint64_t x = 1; x < field_size(modulus); ++x) {
    if (schoolbook_mul(a, x, modulus) == 1) return x;
  }
  return 0;
}

inline std::uint64_t power_sum_trace(std::uint64_t a, std::uint64_t modulus) {
  std::uint64_t acc = 0;
  std::uint64_t p = a;
  for (std::uint64_t s = field_size(modulus); s > 1; s >>= 1) {
    acc ^= p;
    p = schoolbook_mul(p, p, modulus);
  }
  return acc;
}

/// Elements are plain bitmasks in the oracle matrices below.
using Mat = std::vector<std::vector<std::uint64_t>>;

/// Laplace expansion along the first row (signs vanish in characteristic 2).
inline std::uint64_t cofactor_det(const Mat& a, std::uint64_t modulus) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::uint64_t acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::uint64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(row);
    }
    acc ^= schoolbook_mul(a[0][c], cofactor_det(minor, modulus), modulus);
  }
  return acc;
}

/// Sum over perfect matchings of the product of matched entries (the
/// characteristic-2 Pfaffian, where all signs are +1).
inline std::uint64_t matching_pfaffian(const Mat& a, std::uint64_t modulus) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n % 2 == 1) return 0;
  std::uint64_t acc = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Mat rest;
    for (std::size_t r = 1; r < n; ++r) {
      if (r == j) continue;
      std::vector<std::uint64_t> row;
      for (std::size_t k = 1; k < n; ++k) {
        if (k != j) row.push_back(a[r][k]);
      }
      rest.push_back(row);
    }
    acc ^= schoolbook_mul(a[0][j], matching_pfaffian(rest, modulus), modulus);
  }
  return acc;
}

}  // namespace oracle
