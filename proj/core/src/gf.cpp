// Copyright 2026 The agq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "agq/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include <fmt/format.h>

namespace agq {

namespace {

// Dense polynomials over GF(p), c_0 first, no trailing zeros (zero is {}).
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small, Fermat is plenty.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - c) * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (k > 0) {
    if (k & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return result;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly index_to_poly(std::uint64_t index, std::uint32_t p, std::uint32_t len) {
  Poly f(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const auto deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = index_to_poly(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

bool has_full_order(const Poly& g, const Poly& m, std::uint32_t p,
                    std::uint64_t group_order) {
  if (poly_mod(g, m, p).empty()) return false;
  for (std::uint64_t l : prime_factors(group_order)) {
    if (poly_powmod(g, group_order / l, m, p) == Poly{1}) return false;
  }
  return poly_powmod(g, group_order, m, p) == Poly{1};
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  for (std::uint32_t g = 2; g < p; ++g) {
    if (has_full_order({g}, {0, 1}, p, p - 1)) return g;
  }
  return 1;
}

// Conway polynomials for the fields this project uses most. Each entry is
// re-verified (irreducible, x primitive) before use.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& builtin_moduli() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

void validate_order(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) {
    throw UnsupportedField(fmt::format("characteristic {} is not prime", p));
  }
  if (e == 0) throw UnsupportedField("extension degree must be positive");
  const std::uint64_t order = ipow(p, e);
  if (order > kMaxFieldOrder || order > std::uint64_t{1} << 32) {
    throw UnsupportedField(
        fmt::format("GF({}^{}) exceeds the supported order {}", p, e,
                    kMaxFieldOrder));
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return {0, 0};
  std::uint32_t e = 0;
  while (q > 1) {
    q /= factors[0];
    ++e;
  }
  return {static_cast<std::uint32_t>(factors[0]), e};
}

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p,
                                                  std::uint32_t e) {
  validate_order(p, e);
  const std::uint64_t group_order = ipow(p, e) - 1;
  if (e == 1) return {(p - smallest_primitive_root(p)) % p, 1};

  if (auto it = builtin_moduli().find({p, e}); it != builtin_moduli().end()) {
    if (is_irreducible(it->second, p) &&
        has_full_order({0, 1}, it->second, p, group_order)) {
      return it->second;
    }
  }
  // First primitive polynomial in canonical order of its lower coefficients.
  const std::uint64_t count = ipow(p, e);
  for (std::uint64_t low = 1; low < count; ++low) {
    Poly f = index_to_poly(low, p, e);
    f.push_back(1);
    if (f[0] != 0 && is_irreducible(f, p) &&
        has_full_order({0, 1}, f, p, group_order)) {
      return f;
    }
  }
  throw UnsupportedField(fmt::format("no primitive polynomial for GF({}^{})", p, e));
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e) {
  return make(p, e, default_modulus(p, e));
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e,
                     std::vector<std::uint32_t> modulus) {
  // One instance per (p, e, modulus) so that independently loaded codes
  // over the same field can be combined.
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, FieldPtr> cache;
  auto key = std::make_pair(p, modulus);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end() && it->second->degree() == e) return it->second;
  }
  auto field = std::make_shared<const Field>(Token{}, p, e, std::move(modulus));
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(field)).first->second;
}

FieldPtr Field::of_order(std::uint32_t order) {
  const auto [p, e] = prime_power(order);
  if (p == 0) throw UnsupportedField(fmt::format("{} is not a prime power", order));
  return make(p, e);
}

FieldPtr Field::from_spec(const FieldSpec& spec) {
  auto field = make(spec.p, spec.e, spec.modulus);
  if (!spec.primitive.empty() &&
      field->from_coeffs(spec.primitive) != field->primitive()) {
    // Any generator is acceptable, it only has to generate.
    const Symbol g = field->from_coeffs(spec.primitive);
    if (g == 0) throw UnsupportedField("primitive element is zero");
    const std::uint32_t group = field->size() - 1;
    for (std::uint64_t l : prime_factors(group)) {
      if (field->pow(g, group / l) == 1) {
        throw UnsupportedField("declared primitive element is not a generator");
      }
    }
  }
  return field;
}

Field::Field(Token, std::uint32_t p, std::uint32_t e,
             std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  validate_order(p, e);
  order_ = static_cast<std::uint32_t>(ipow(p, e));
  if (modulus_.size() != e + 1 || modulus_.back() != 1) {
    throw UnsupportedField(
        fmt::format("modulus must be monic of degree {} (got {} coefficients)", e,
                    modulus_.size()));
  }
  for (auto c : modulus_) {
    if (c >= p) throw UnsupportedField("modulus coefficient out of range");
  }
  if (!is_irreducible(modulus_, p)) {
    throw UnsupportedField("modulus is reducible over the prime field");
  }

  const std::uint64_t group_order = order_ - 1;
  auto to_index = [&](const Poly& f) {
    Symbol s = 0;
    for (std::size_t i = f.size(); i-- > 0;) s = s * p_ + f[i];
    return s;
  };

  // Generator: x if primitive, otherwise the first element of full order.
  Poly generator = poly_mod({0, 1}, modulus_, p);
  if (!has_full_order(generator, modulus_, p, group_order)) {
    generator.clear();
    for (std::uint64_t idx = 1; idx < order_; ++idx) {
      Poly g = index_to_poly(idx, p, e);
      trim(g);
      if (has_full_order(g, modulus_, p, group_order)) {
        generator = g;
        break;
      }
    }
  }
  if (order_ == 2) generator = {1};

  exp_.assign(order_ - 1, 0);
  log_.assign(order_, 0);
  Poly power{1};
  for (std::uint32_t i = 0; i < order_ - 1; ++i) {
    const Symbol s = to_index(power);
    exp_[i] = s;
    log_[s] = i;
    power = poly_mulmod(power, generator, modulus_, p);
  }

  neg_.resize(order_);
  for (Symbol a = 0; a < order_; ++a) {
    Symbol r = 0, scale = 1, x = a;
    for (std::uint32_t i = 0; i < e_; ++i) {
      const std::uint32_t d = x % p_;
      x /= p_;
      r += ((p_ - d) % p_) * scale;
      scale *= p_;
    }
    neg_[a] = r;
  }
  if (p_ != 2 && order_ <= 256) {
    add_table_.resize(std::size_t{order_} * order_);
    for (Symbol a = 0; a < order_; ++a) {
      for (Symbol b = 0; b < order_; ++b) {
        add_table_[std::size_t{a} * order_ + b] = add_digits(a, b);
      }
    }
  }

  if (is_quadratic_extension()) {
    const std::uint32_t q = subfield_order();
    subfield_flag_.assign(order_, 0);
    for (Symbol a = 0; a < order_; ++a) {
      if (pow(a, q) == a) {
        subfield_flag_[a] = 1;
        subfield_.push_back(a);
      }
    }
  }
}

Symbol Field::add_digits(Symbol a, Symbol b) const {
  Symbol r = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint32_t d = (a % p_ + b % p_) % p_;
    a /= p_;
    b /= p_;
    r += d * scale;
    scale *= p_;
  }
  return r;
}

Symbol Field::inv(Symbol a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : order_ - 1 - l];
}

Symbol Field::pow(Symbol a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = (std::uint64_t{log_[a]} * (k % (order_ - 1))) % (order_ - 1);
  return exp_[l];
}

std::vector<std::uint32_t> Field::coeffs(Symbol a) const {
  std::vector<std::uint32_t> c(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Symbol Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > e_) throw FieldError("too many coefficients");
  Symbol s = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw FieldError("coefficient out of range");
    s = s * p_ + coeffs[i];
  }
  return s;
}

Symbol Field::from_int(std::int64_t c) const {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Symbol>(((c % p) + p) % p);
}

std::vector<Felt> Field::elements() const {
  std::vector<Felt> out;
  out.reserve(order_);
  for (Symbol a = 0; a < order_; ++a) out.emplace_back(this, a);
  return out;
}

Felt Field::element(Symbol a) const {
  if (a >= order_) throw FieldError(fmt::format("index {} outside GF({})", a, order_));
  return Felt(this, a);
}
Felt Field::zero() const { return Felt(this, 0); }
Felt Field::one() const { return Felt(this, 1); }
Felt Field::generator() const { return Felt(this, primitive()); }

FieldSpec Field::spec() const {
  return FieldSpec{p_, e_, modulus_, coeffs(primitive())};
}

void Field::require_quadratic() const {
  if (!is_quadratic_extension()) {
    throw UnsupportedField(
        fmt::format("GF({}^{}) has no quadratic subfield structure", p_, e_));
  }
}

std::uint32_t Field::subfield_order() const {
  require_quadratic();
  return static_cast<std::uint32_t>(ipow(p_, e_ / 2));
}

Symbol Field::frobenius_q(Symbol a) const {
  require_quadratic();
  return pow(a, subfield_order());
}

bool Field::in_subfield(Symbol a) const {
  require_quadratic();
  return subfield_flag_[a] != 0;
}

const std::vector<Symbol>& Field::subfield_elements() const {
  require_quadratic();
  return subfield_;
}

std::string Field::format(Symbol a) const {
  if (a == 0) return "0";
  const auto c = coeffs(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]);
      out += 'a';
      if (i > 1) out += fmt::format("^{}", i);
    }
  }
  return out;
}

void to_json(nlohmann::json& j, const FieldSpec& spec) {
  j = nlohmann::json{{"p", spec.p},
                     {"e", spec.e},
                     {"modulus", spec.modulus},
                     {"primitive", spec.primitive}};
}

void from_json(const nlohmann::json& j, FieldSpec& spec) {
  j.at("p").get_to(spec.p);
  j.at("e").get_to(spec.e);
  j.at("modulus").get_to(spec.modulus);
  if (j.contains("primitive")) j.at("primitive").get_to(spec.primitive);
}

// Felt

const Field& Felt::checked_field() const {
  if (field_ == nullptr) throw FieldMismatch("unbound field element");
  return *field_;
}

const Field& Felt::shared_field(const Felt& o) const {
  if (field_ == nullptr || field_ != o.field_) {
    throw FieldMismatch("operands belong to different fields");
  }
  return *field_;
}

std::vector<std::uint32_t> Felt::coeffs() const { return checked_field().coeffs(index_); }

Felt Felt::operator+(const Felt& o) const {
  return Felt(field_, shared_field(o).add(index_, o.index_));
}
Felt Felt::operator-(const Felt& o) const {
  return Felt(field_, shared_field(o).sub(index_, o.index_));
}
Felt Felt::operator-() const { return Felt(field_, checked_field().neg(index_)); }
Felt Felt::operator*(const Felt& o) const {
  return Felt(field_, shared_field(o).mul(index_, o.index_));
}
Felt Felt::operator/(const Felt& o) const {
  return Felt(field_, shared_field(o).div(index_, o.index_));
}

std::string Felt::to_string() const { return checked_field().format(index_); }

Felt inv(const Felt& a) {
  if (a.field() == nullptr) throw FieldMismatch("unbound field element");
  return Felt(a.field(), a.field()->inv(a.index()));
}

Felt pow(const Felt& a, std::uint64_t k) {
  if (a.field() == nullptr) throw FieldMismatch("unbound field element");
  return Felt(a.field(), a.field()->pow(a.index(), k));
}

Felt frobenius_q(const Felt& a) {
  if (a.field() == nullptr) throw FieldMismatch("unbound field element");
  return Felt(a.field(), a.field()->frobenius_q(a.index()));
}

// FieldTower

FieldTower FieldTower::quadratic(std::uint32_t p, std::uint32_t s) {
  return FieldTower(Field::make(p, s), Field::make(p, 2 * s));
}

FieldTower::FieldTower(FieldPtr base, FieldPtr ext)
    : base_(std::move(base)), ext_(std::move(ext)) {
  if (!base_ || !ext_) throw UnsupportedField("null field in tower");
  if (base_->characteristic() != ext_->characteristic() ||
      ext_->degree() % base_->degree() != 0) {
    throw UnsupportedField(
        fmt::format("GF({}) does not embed into GF({})", base_->size(), ext_->size()));
  }
  // Image of the base variable: the first root (canonical order) of the
  // base modulus inside ext.
  const auto& f = base_->modulus();
  Symbol root = 0;
  bool found = false;
  for (Symbol b = 0; b < ext_->size() && !found; ++b) {
    Symbol acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) {
      acc = ext_->add(ext_->mul(acc, b), ext_->from_int(f[i]));
    }
    if (acc == 0) {
      root = b;
      found = true;
    }
  }
  if (!found) throw UnsupportedField("base modulus has no root in extension");

  embed_.resize(base_->size());
  for (Symbol a = 0; a < base_->size(); ++a) {
    const auto c = base_->coeffs(a);
    Symbol acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = ext_->add(ext_->mul(acc, root), ext_->from_int(c[i]));
    }
    embed_[a] = acc;
  }
}

Felt FieldTower::embed(const Felt& a) const {
  if (a.field() != base_.get()) throw FieldMismatch("element is not in the tower base");
  return Felt(ext_.get(), embed_[a.index()]);
}

}  // namespace agq
