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

#include "c2pencil/gf2m.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "c2pencil/poly.hpp"

namespace c2pencil {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::RepeatedPfaffianRoots: return "RepeatedPfaffianRoots";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotInStabilizer: return "NotInStabilizer";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

namespace {

int gf2_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// Carry-less product of two values below 2^32.
std::uint64_t clmul32(std::uint64_t a, std::uint64_t b) {
  std::array<std::uint64_t, 16> window{};
  for (unsigned i = 1; i < 16; ++i) {
    window[i] = (i & 1) ? (window[i - 1] ^ a) : (window[i >> 1] << 1);
  }
  std::uint64_t r = 0;
  for (int shift = 28; shift >= 0; shift -= 4) {
    r = (r << 4) ^ window[(b >> shift) & 0xF];
  }
  return r;
}

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t p) {
  const int dp = gf2_degree(p);
  for (int d = gf2_degree(a); d >= dp; d = gf2_degree(a)) {
    a ^= p << (d - dp);
  }
  return a;
}

std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return gf2_mod(clmul32(a, b), p);
}

std::uint64_t gf2_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = gf2_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(2^k) mod p.
std::uint64_t frobenius_power_of_x(unsigned k, std::uint64_t p) {
  std::uint64_t r = gf2_mod(0b10, p);
  for (unsigned i = 0; i < k; ++i) r = gf2_mulmod(r, r, p);
  return r;
}

}  // namespace

bool is_irreducible_gf2(std::uint64_t poly) {
  const int d = gf2_degree(poly);
  if (d <= 0) return false;
  if (d == 1) return true;
  if (d > static_cast<int>(kMaxFieldDegree)) {
    throw Error(ErrorKind::InvalidInput, "irreducibility test limited to degree <= 32");
  }
  // Rabin's test.
  const std::uint64_t x = 0b10;
  if (frobenius_power_of_x(static_cast<unsigned>(d), poly) != x) return false;
  for (unsigned r : prime_factors(static_cast<unsigned>(d))) {
    const std::uint64_t h = frobenius_power_of_x(static_cast<unsigned>(d) / r, poly) ^ x;
    if (gf2_degree(gf2_gcd(poly, h)) > 0) return false;
  }
  return true;
}

struct FieldRegistry {
  std::mutex mutex;
  std::map<std::pair<unsigned, std::uint64_t>, std::unique_ptr<FieldSpec>> fields;
  std::map<unsigned, const FieldSpec*> canonical;

  static FieldRegistry& instance() {
    static FieldRegistry registry;
    return registry;
  }

  const FieldSpec& intern(unsigned m, std::uint64_t modulus) {
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = fields[{m, modulus}];
    if (!slot) slot.reset(new FieldSpec(m, modulus));
    return *slot;
  }
};

FieldSpec::FieldSpec(unsigned m, std::uint64_t modulus)
    : m_(m), modulus_(modulus), mask_((std::uint64_t{1} << m) - 1) {}

const FieldSpec& FieldSpec::get(unsigned m, std::uint64_t modulus) {
  if (m == 0 || m > kMaxFieldDegree) {
    throw Error(ErrorKind::InvalidInput, "field degree must be in [1, 32]");
  }
  if (gf2_degree(modulus) != static_cast<int>(m)) {
    throw Error(ErrorKind::InvalidInput,
                "modulus " + to_hex(modulus) + " does not have degree " + std::to_string(m));
  }
  if (!is_irreducible_gf2(modulus)) {
    throw Error(ErrorKind::InvalidInput, "modulus " + to_hex(modulus) + " is reducible");
  }
  return FieldRegistry::instance().intern(m, modulus);
}

const FieldSpec& FieldSpec::unchecked(unsigned m, std::uint64_t modulus) {
  if (m == 0 || m > kMaxFieldDegree || gf2_degree(modulus) != static_cast<int>(m)) {
    throw Error(ErrorKind::InvalidInput, "malformed modulus");
  }
  return FieldRegistry::instance().intern(m, modulus);
}

const FieldSpec& FieldSpec::canonical(unsigned m) {
  if (m == 0 || m > kMaxFieldDegree) {
    throw Error(ErrorKind::InvalidInput, "field degree must be in [1, 32]");
  }
  auto& reg = FieldRegistry::instance();
  {
    std::lock_guard<std::mutex> lock(reg.mutex);
    if (auto it = reg.canonical.find(m); it != reg.canonical.end()) return *it->second;
  }
  const std::uint64_t lo = std::uint64_t{1} << m;
  for (std::uint64_t p = lo; p < 2 * lo; ++p) {
    if (is_irreducible_gf2(p)) {
      const FieldSpec& f = get(m, p);
      std::lock_guard<std::mutex> lock(reg.mutex);
      reg.canonical[m] = &f;
      return f;
    }
  }
  throw Error(ErrorKind::InvalidInput, "no irreducible polynomial found");  // unreachable
}

namespace {

std::uint64_t parse_hex(std::string_view text, std::string_view what) {
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
    throw Error(ErrorKind::InvalidInput,
                std::string(what) + ": expected 0x<hex>, got '" + std::string(text) + "'");
  }
  std::uint64_t value = 0;
  const char* first = text.data() + 2;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value, 16);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::InvalidInput,
                std::string(what) + ": bad hex literal '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

const FieldSpec& FieldSpec::parse(std::string_view text) {
  // F2^m/0x<hex>
  constexpr std::string_view prefix = "F2^";
  const auto slash = text.find('/');
  if (text.substr(0, prefix.size()) != prefix || slash == std::string_view::npos) {
    throw Error(ErrorKind::InvalidInput,
                "field spec must look like F2^m/0x<modulus>, got '" + std::string(text) + "'");
  }
  unsigned m = 0;
  const auto digits = text.substr(prefix.size(), slash - prefix.size());
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::InvalidInput, "bad field degree in '" + std::string(text) + "'");
  }
  return get(m, parse_hex(text.substr(slash + 1), "field modulus"));
}

std::string FieldSpec::str() const { return "F2^" + std::to_string(m_) + "/" + to_hex(modulus_); }

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const noexcept {
  std::uint64_t r = clmul32(a, b);
  for (int d = gf2_degree(r); d >= static_cast<int>(m_); d = gf2_degree(r)) {
    r ^= modulus_ << (d - static_cast<int>(m_));
  }
  return r;
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t result = 1;
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + str());
  return pow(a, size() - 2);
}

std::uint64_t FieldSpec::sqrt(std::uint64_t a) const noexcept {
  for (unsigned i = 1; i < m_; ++i) a = mul(a, a);
  return a;
}

unsigned FieldSpec::trace(std::uint64_t a) const noexcept {
  std::uint64_t t = 0;
  for (unsigned i = 0; i < m_; ++i) {
    t ^= a;
    a = mul(a, a);
  }
  return static_cast<unsigned>(t & 1);
}

FieldElement::FieldElement(const FieldSpec& field, std::uint64_t bits) : field_(&field), bits_(bits) {
  if (bits >= field.size()) {
    throw Error(ErrorKind::InvalidInput,
                "element " + to_hex(bits) + " out of range for " + field.str());
  }
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_) {
    throw Error(ErrorKind::FieldMismatch,
                "mixing elements of " + field_->str() + " and " + o.field_->str());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return FieldElement(*field_, bits_ ^ o.bits_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return FieldElement(*field_, field_->mul(bits_, o.bits_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return FieldElement(*field_, field_->mul(bits_, field_->inv(o.bits_)));
}

FieldElement FieldElement::inverse() const { return FieldElement(*field_, field_->inv(bits_)); }

std::string FieldElement::hex() const { return to_hex(bits_); }

std::string to_hex(std::uint64_t bits) {
  std::ostringstream os;
  os << "0x" << std::hex << bits;
  return os.str();
}

FieldElement parse_element(const FieldSpec& field, std::string_view text) {
  return FieldElement(field, parse_hex(text, "element"));
}

std::uint64_t multiplicative_order(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "order of zero");
  const std::uint64_t group = x.field().size() - 1;
  std::uint64_t order = group;
  std::uint64_t n = group;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    while (order % p == 0 && x.pow(order / p).is_one()) order /= p;
  }
  if (n > 1) {
    while (order % n == 0 && x.pow(order / n).is_one()) order /= n;
  }
  return order;
}

std::optional<std::pair<FieldElement, FieldElement>> solve_quadratic(const FieldElement& b,
                                                                     const FieldElement& c) {
  const FieldSpec& f = b.field();
  if (b.is_zero()) {
    const FieldElement r = c.sqrt();
    return std::pair{r, r};
  }
  // T = b*U turns the equation into U^2 + U = c / b^2.
  const FieldElement delta = c / b.square();
  if (delta.trace() != 0) return std::nullopt;
  FieldElement u = FieldElement::zero(f);
  if (f.degree() % 2 == 1) {
    // Half-trace: sum of delta^(4^j), j = 0..(m-1)/2.
    FieldElement term = delta;
    for (unsigned j = 0; j <= (f.degree() - 1) / 2; ++j) {
      u += term;
      term = term.square().square();
    }
  } else {
    // Even degree: iterate z <- z^2 + w^2 * tau, w <- w^2 + delta with
    // Tr(tau) = 1; afterwards z^2 + z = delta.
    // Trace is a nonzero linear functional, so some basis element has trace 1.
    FieldElement tau = FieldElement::one(f);
    for (unsigned k = 1; tau.trace() != 1; ++k) tau = FieldElement(f, std::uint64_t{1} << k);
    FieldElement w = delta;
    for (unsigned i = 1; i < f.degree(); ++i) {
      u = u.square() + w.square() * tau;
      w = w.square() + delta;
    }
  }
  FieldElement r1 = b * u;
  FieldElement r2 = r1 + b;
  if (!(r1 * r1 + b * r1 + c).is_zero()) {
    throw Error(ErrorKind::VerificationFailure, "quadratic solver produced a non-root");
  }
  if (r2.bits() < r1.bits()) std::swap(r1, r2);
  return std::pair{r1, r2};
}

Embedding::Embedding(const FieldSpec& field) : from_(&field), to_(&field) {
  for (unsigned k = 0; k < field.degree(); ++k) basis_.push_back(std::uint64_t{1} << k);
}

Embedding::Embedding(const FieldSpec& from, const FieldSpec& to, std::uint64_t generator_image)
    : from_(&from), to_(&to) {
  if (to.degree() % from.degree() != 0) {
    throw Error(ErrorKind::InvalidInput, from.str() + " is not a subfield of " + to.str());
  }
  std::uint64_t power = 1;
  for (unsigned k = 0; k < from.degree(); ++k) {
    basis_.push_back(power);
    power = to.mul(power, generator_image);
  }
  // The image of x must be a root of the small modulus.
  std::uint64_t value = 0;
  std::uint64_t xp = 1;
  for (unsigned k = 0; k <= from.degree(); ++k) {
    if ((from.modulus() >> k) & 1) value ^= xp;
    xp = to.mul(xp, generator_image);
  }
  if (value != 0) {
    throw Error(ErrorKind::VerificationFailure, "embedding generator is not a root of the modulus");
  }
}

FieldElement Embedding::operator()(const FieldElement& x) const {
  if (&x.field() != from_) {
    throw Error(ErrorKind::FieldMismatch,
                "embedding expects " + from_->str() + ", got " + x.field().str());
  }
  std::uint64_t r = 0;
  for (unsigned k = 0; k < basis_.size(); ++k) {
    if ((x.bits() >> k) & 1) r ^= basis_[k];
  }
  return FieldElement(*to_, r);
}

std::optional<FieldElement> Embedding::preimage(const FieldElement& x) const {
  if (&x.field() != to_) {
    throw Error(ErrorKind::FieldMismatch, "preimage expects " + to_->str());
  }
  // Gaussian elimination over GF(2): rows are (image, combination).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  for (unsigned k = 0; k < basis_.size(); ++k) {
    std::uint64_t v = basis_[k];
    std::uint64_t comb = std::uint64_t{1} << k;
    for (const auto& [pv, pc] : rows) {
      if (v & (std::uint64_t{1} << gf2_degree(pv))) {
        v ^= pv;
        comb ^= pc;
      }
    }
    if (v != 0) rows.emplace_back(v, comb);
  }
  std::uint64_t v = x.bits();
  std::uint64_t comb = 0;
  for (const auto& [pv, pc] : rows) {
    if (v & (std::uint64_t{1} << gf2_degree(pv))) {
      v ^= pv;
      comb ^= pc;
    }
  }
  if (v != 0) return std::nullopt;
  return FieldElement(*from_, comb);
}

Embedding Embedding::then(const Embedding& next) const {
  if (&next.from() != to_) {
    throw Error(ErrorKind::FieldMismatch, "cannot compose embeddings");
  }
  Embedding out(*this);
  out.to_ = next.to_;
  for (auto& b : out.basis_) b = next(FieldElement(*to_, b)).bits();
  return out;
}

Embedding extend_field(const FieldSpec& field, unsigned d) {
  if (d == 0) throw Error(ErrorKind::InvalidInput, "extension degree must be positive");
  if (d == 1) return Embedding(field);
  const unsigned big_degree = field.degree() * d;
  if (big_degree > kMaxFieldDegree) {
    throw FieldTooSmall(d, "extension of " + field.str() + " by degree " + std::to_string(d) +
                               " exceeds GF(2^32)");
  }
  const FieldSpec& big = FieldSpec::canonical(big_degree);
  std::vector<FieldElement> coeffs;
  for (unsigned k = 0; k <= field.degree(); ++k) {
    coeffs.emplace_back(big, (field.modulus() >> k) & 1);
  }
  const auto roots = find_roots(UniPoly(big, std::move(coeffs)));
  if (roots.empty()) {
    throw Error(ErrorKind::VerificationFailure, "modulus has no root in the extension");
  }
  return Embedding(field, big, roots.front().value.bits());
}

TruncatedElement::TruncatedElement(const FieldSpec& field, unsigned n)
    : coeffs_(n, FieldElement::zero(field)) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "truncation order must be positive");
}

TruncatedElement::TruncatedElement(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidInput, "truncation order must be positive");
}

TruncatedElement TruncatedElement::constant(const FieldElement& c, unsigned n) {
  TruncatedElement r(c.field(), n);
  r.coeffs_[0] = c;
  return r;
}

bool TruncatedElement::is_zero() const noexcept {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

TruncatedElement TruncatedElement::operator+(const TruncatedElement& o) const {
  if (o.order() != order()) throw Error(ErrorKind::InvalidInput, "truncation orders differ");
  TruncatedElement r(*this);
  for (unsigned j = 0; j < order(); ++j) r.coeffs_[j] += o.coeffs_[j];
  return r;
}

TruncatedElement TruncatedElement::operator*(const TruncatedElement& o) const {
  if (o.order() != order()) throw Error(ErrorKind::InvalidInput, "truncation orders differ");
  TruncatedElement r(field(), order());
  for (unsigned i = 0; i < order(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j < order(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

TruncatedElement TruncatedElement::inverse() const {
  if (!is_unit()) throw Error(ErrorKind::DivisionByZero, "inverse of a non-unit");
  const FieldElement inv0 = coeffs_[0].inverse();
  TruncatedElement r(field(), order());
  r.coeffs_[0] = inv0;
  for (unsigned k = 1; k < order(); ++k) {
    FieldElement acc = FieldElement::zero(field());
    for (unsigned j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = acc * inv0;
  }
  return r;
}

}  // namespace c2pencil
