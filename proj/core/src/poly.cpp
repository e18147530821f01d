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

#include "c2pencil/poly.hpp"

#include <algorithm>
#include <numeric>

namespace c2pencil {

namespace {

constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 16;

void require_same(const FieldSpec& a, const FieldSpec& b) {
  if (&a != &b) {
    throw Error(ErrorKind::FieldMismatch, "polynomials over " + a.str() + " and " + b.str());
  }
}

}  // namespace

UniPoly::UniPoly(const FieldSpec& field, std::vector<FieldElement> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same(field, c.field());
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::linear_root(const FieldElement& r) {
  return UniPoly(r.field(), {r, FieldElement::one(r.field())});
}

UniPoly UniPoly::monomial(const FieldElement& c, unsigned degree) {
  std::vector<FieldElement> coeffs(degree + 1, FieldElement::zero(c.field()));
  coeffs[degree] = c;
  return UniPoly(c.field(), std::move(coeffs));
}

FieldElement UniPoly::coeff(unsigned j) const {
  return j < coeffs_.size() ? coeffs_[j] : FieldElement::zero(*field_);
}

FieldElement UniPoly::leading() const {
  return coeffs_.empty() ? FieldElement::zero(*field_) : coeffs_.back();
}

FieldElement UniPoly::operator()(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(*field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  require_same(*field_, *o.field_);
  std::vector<FieldElement> out(std::max(coeffs_.size(), o.coeffs_.size()), FieldElement::zero(*field_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j] += coeffs_[j];
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[j] += o.coeffs_[j];
  return UniPoly(*field_, std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  require_same(*field_, *o.field_);
  if (is_zero() || o.is_zero()) return UniPoly(*field_);
  std::vector<FieldElement> out(coeffs_.size() + o.coeffs_.size() - 1, FieldElement::zero(*field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UniPoly(*field_, std::move(out));
}

UniPoly UniPoly::operator*(const FieldElement& c) const {
  std::vector<FieldElement> out = coeffs_;
  for (auto& x : out) x *= c;
  return UniPoly(*field_, std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  require_same(*field_, *divisor.field_);
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<FieldElement> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(*field_), *this};
  std::vector<FieldElement> quot(coeffs_.size() - dd, FieldElement::zero(*field_));
  const FieldElement lead_inv = divisor.leading().inverse();
  for (int k = degree(); k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    const FieldElement q = rem[k] * lead_inv;
    quot[k - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] += q * divisor.coeffs_[j];
  }
  return {UniPoly(*field_, std::move(quot)), UniPoly(*field_, std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
  std::vector<FieldElement> out;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    out.push_back(j % 2 == 1 ? coeffs_[j] : FieldElement::zero(*field_));
  }
  return UniPoly(*field_, std::move(out));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m) {
  UniPoly result = UniPoly::constant(FieldElement::one(m.field())) % m;
  UniPoly b = base % m;
  while (e != 0) {
    if (e & 1) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

UniPoly interpolate(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys) {
  if (xs.empty() || xs.size() != ys.size()) throw Error(ErrorKind::InvalidInput, "interpolation needs matching nodes");
  const FieldSpec& f = xs.front().field();
  UniPoly out(f);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis = UniPoly::constant(FieldElement::one(f));
    FieldElement denom = FieldElement::one(f);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly::linear_root(xs[j]);
      denom *= xs[i] + xs[j];
    }
    out = out + basis * (ys[i] / denom);
  }
  return out;
}

namespace {

// x^(q) mod m where q is the field size, by m repeated squarings.
UniPoly frobenius(const UniPoly& x, const UniPoly& m) {
  UniPoly r = x % m;
  for (unsigned i = 0; i < m.field().degree(); ++i) r = (r * r) % m;
  return r;
}

UniPoly t_poly(const FieldSpec& f) {
  return UniPoly::monomial(FieldElement::one(f), 1);
}

unsigned root_multiplicity(UniPoly p, const FieldElement& r) {
  const UniPoly lin = UniPoly::linear_root(r);
  unsigned mult = 0;
  while (!p.is_zero()) {
    auto [q, rem] = p.divmod(lin);
    if (!rem.is_zero()) break;
    ++mult;
    p = std::move(q);
  }
  return mult;
}

// Splits a squarefree product of distinct linear factors.
std::vector<FieldElement> split_linear_product(const UniPoly& h) {
  const FieldSpec& f = h.field();
  std::vector<UniPoly> pieces{h.monic()};
  // Distinct roots r1 != r2 are separated by Tr(delta * t) for some delta in
  // the polynomial basis, so sweeping the basis splits everything.
  for (unsigned k = 0; k < f.degree(); ++k) {
    const FieldElement delta(f, std::uint64_t{1} << k);
    std::vector<UniPoly> next;
    for (auto& piece : pieces) {
      if (piece.degree() <= 1) {
        next.push_back(std::move(piece));
        continue;
      }
      UniPoly term = UniPoly::monomial(delta, 1) % piece;
      UniPoly trace = term;
      for (unsigned j = 1; j < f.degree(); ++j) {
        term = (term * term) % piece;
        trace = trace + term;
      }
      UniPoly g = gcd(piece, trace);
      if (g.degree() > 0 && g.degree() < piece.degree()) {
        next.push_back(piece / g);
        next.push_back(std::move(g));
      } else {
        next.push_back(std::move(piece));
      }
    }
    pieces = std::move(next);
  }
  std::vector<FieldElement> roots;
  for (const auto& piece : pieces) {
    if (piece.degree() != 1) {
      throw Error(ErrorKind::VerificationFailure, "equal-degree splitting did not terminate");
    }
    roots.push_back(piece.coeff(0) / piece.coeff(1));
  }
  return roots;
}

}  // namespace

std::vector<Root> find_roots_by_factorization(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidInput, "roots of the zero polynomial");
  std::vector<Root> out;
  if (p.degree() == 0) return out;
  const UniPoly monic = p.monic();
  const UniPoly t = t_poly(p.field());
  const UniPoly h = gcd(monic, frobenius(t, monic) + t);
  if (h.degree() <= 0) return out;
  for (const auto& r : split_linear_product(h)) out.push_back({r, root_multiplicity(monic, r)});
  std::sort(out.begin(), out.end(),
            [](const Root& a, const Root& b) { return a.value.bits() < b.value.bits(); });
  return out;
}

std::vector<Root> find_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidInput, "roots of the zero polynomial");
  const FieldSpec& f = p.field();
  if (f.size() > kScanLimit) return find_roots_by_factorization(p);
  std::vector<Root> out;
  unsigned total = 0;
  for (std::uint64_t bits = 0; bits < f.size() && total < static_cast<unsigned>(p.degree()); ++bits) {
    const FieldElement x(f, bits);
    if (p(x).is_zero()) {
      const unsigned mult = root_multiplicity(p, x);
      out.push_back({x, mult});
      total += mult;
    }
  }
  return out;
}

namespace {

UniPoly radical(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  const UniPoly d = p.derivative();
  if (d.is_zero()) {
    // p = r^2 with r's coefficients the square roots of p's even coefficients.
    std::vector<FieldElement> r;
    for (int j = 0; j <= p.degree(); j += 2) r.push_back(p.coeff(static_cast<unsigned>(j)).sqrt());
    return radical(UniPoly(p.field(), std::move(r)));
  }
  const UniPoly g = gcd(p, d);
  const UniPoly odd_part = (p / g).monic();
  const UniPoly rest = radical(g);
  return (odd_part * rest / gcd(odd_part, rest)).monic();
}

}  // namespace

std::vector<unsigned> distinct_degree_factor_degrees(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidInput, "factoring the zero polynomial");
  std::vector<unsigned> degrees;
  UniPoly f = p.monic();
  const UniPoly t = t_poly(p.field());
  UniPoly w = t % f;
  for (unsigned i = 1; f.degree() >= static_cast<int>(2 * i); ++i) {
    w = frobenius(w, f);
    const UniPoly g = gcd(f, w + t);
    if (g.degree() > 0) {
      degrees.insert(degrees.end(), static_cast<unsigned>(g.degree()) / i, i);
      f = f / g;
      w = w % f;
    }
  }
  if (f.degree() > 0) degrees.push_back(static_cast<unsigned>(f.degree()));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

unsigned splitting_degree(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidInput, "splitting degree of the zero polynomial");
  unsigned l = 1;
  for (unsigned d : distinct_degree_factor_degrees(radical(p))) l = std::lcm(l, d);
  return l;
}

P1Point P1Point::make(const FieldElement& s, const FieldElement& t) {
  if (!s.is_zero()) return {FieldElement::one(s.field()), t / s};
  if (!t.is_zero()) return {s, FieldElement::one(t.field())};
  throw Error(ErrorKind::InvalidInput, "[0:0] is not a point of P^1");
}

std::string P1Point::str() const { return "[" + s.hex() + ":" + t.hex() + "]"; }

BinaryForm::BinaryForm(const FieldSpec& field, unsigned degree)
    : field_(&field), coeffs_(degree + 1, FieldElement::zero(field)) {}

BinaryForm::BinaryForm(const FieldSpec& field, std::vector<FieldElement> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidInput, "binary form needs a coefficient");
  for (const auto& c : coeffs_) require_same(field, c.field());
}

BinaryForm BinaryForm::linear(const FieldElement& a, const FieldElement& b) {
  return BinaryForm(a.field(), {a, b});
}

bool BinaryForm::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

FieldElement BinaryForm::operator()(const FieldElement& s, const FieldElement& t) const {
  FieldElement sum = FieldElement::zero(*field_);
  const unsigned d = degree();
  for (unsigned j = 0; j <= d; ++j) sum += coeffs_[j] * s.pow(d - j) * t.pow(j);
  return sum;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  require_same(*field_, *o.field_);
  BinaryForm out(*field_, degree() + o.degree());
  for (unsigned i = 0; i <= degree(); ++i) {
    for (unsigned j = 0; j <= o.degree(); ++j) out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return out;
}

BinaryForm BinaryForm::operator*(const FieldElement& c) const {
  BinaryForm out(*this);
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (o.degree() != degree()) throw Error(ErrorKind::InvalidInput, "adding forms of different degree");
  BinaryForm out(*this);
  for (unsigned j = 0; j <= degree(); ++j) out.coeffs_[j] += o.coeffs_[j];
  return out;
}

bool BinaryForm::equal_up_to_scalar(const BinaryForm& o) const {
  if (o.degree() != degree() || &o.field() != field_) return false;
  std::optional<FieldElement> ratio;
  for (unsigned j = 0; j <= degree(); ++j) {
    const bool za = coeffs_[j].is_zero();
    const bool zb = o.coeffs_[j].is_zero();
    if (za != zb) return false;
    if (za) continue;
    const FieldElement r = o.coeffs_[j] / coeffs_[j];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio.has_value();
}

BinaryForm BinaryForm::partial_s() const {
  const unsigned d = degree();
  if (d == 0) return BinaryForm(*field_, 0);
  BinaryForm out(*field_, d - 1);
  for (unsigned j = 0; j < d; ++j) {
    if ((d - j) % 2 == 1) out.coeffs_[j] = coeffs_[j];
  }
  return out;
}

BinaryForm BinaryForm::partial_t() const {
  const unsigned d = degree();
  if (d == 0) return BinaryForm(*field_, 0);
  BinaryForm out(*field_, d - 1);
  for (unsigned j = 1; j <= d; ++j) {
    if (j % 2 == 1) out.coeffs_[j - 1] = coeffs_[j];
  }
  return out;
}

UniPoly BinaryForm::dehomogenize() const {
  const unsigned d = degree();
  std::vector<FieldElement> out(d + 1, FieldElement::zero(*field_));
  for (unsigned j = 0; j <= d; ++j) out[d - j] = coeffs_[j];
  return UniPoly(*field_, std::move(out));
}

BinaryFormRoots binary_form_roots(const BinaryForm& form) {
  if (form.is_zero()) throw Error(ErrorKind::InvalidInput, "roots of the zero binary form");
  const FieldSpec& f = form.field();
  const UniPoly p = form.dehomogenize();
  BinaryFormRoots out;
  unsigned total = 0;
  for (const auto& r : find_roots(p)) {
    out.roots.push_back({P1Point::make(r.value, FieldElement::one(f)), r.multiplicity});
    total += r.multiplicity;
  }
  const unsigned at_infinity = form.degree() - static_cast<unsigned>(p.degree());
  if (at_infinity > 0) {
    out.roots.push_back({P1Point::make(FieldElement::one(f), FieldElement::zero(f)), at_infinity});
    total += at_infinity;
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const P1Root& a, const P1Root& b) { return a.point < b.point; });
  out.split = total == form.degree();
  return out;
}

bool squarefree_check(const BinaryForm& form) {
  if (form.is_zero()) return false;
  if (form.degree() == 0) return true;
  const BinaryForm ds = form.partial_s();
  const BinaryForm dt = form.partial_t();
  if (ds.is_zero() && dt.is_zero()) return false;
  const UniPoly g = gcd(gcd(form.dehomogenize(), ds.dehomogenize()), dt.dehomogenize());
  if (g.degree() > 0) return false;
  // A common factor t shows up as a vanishing s^top coefficient in all three.
  const auto t_divides = [](const BinaryForm& b) { return b.coeffs().front().is_zero(); };
  return !(t_divides(form) && t_divides(ds) && t_divides(dt));
}

unsigned splitting_degree(const BinaryForm& form) {
  if (form.is_zero()) throw Error(ErrorKind::InvalidInput, "splitting degree of the zero form");
  const UniPoly p = form.dehomogenize();
  return p.degree() <= 0 ? 1 : splitting_degree(p);
}

UniPoly embed(const Embedding& e, const UniPoly& p) {
  std::vector<FieldElement> out;
  for (const auto& c : p.coeffs()) out.push_back(e(c));
  return UniPoly(e.to(), std::move(out));
}

BinaryForm embed(const Embedding& e, const BinaryForm& p) {
  std::vector<FieldElement> out;
  for (const auto& c : p.coeffs()) out.push_back(e(c));
  return BinaryForm(e.to(), std::move(out));
}

P1Point embed(const Embedding& e, const P1Point& p) { return P1Point::make(e(p.s), e(p.t)); }

}  // namespace c2pencil
