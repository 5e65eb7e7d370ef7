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

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

/// Finite fields GF(p^e) in polynomial-basis representation.
///
/// Every element is identified by its canonical index: the coefficient
/// vector (c_0, ..., c_{e-1}) of c_0 + c_1 a + ... + c_{e-1} a^{e-1} read as a
/// base-p integer with c_0 least significant. Index order is the canonical
/// element order used everywhere downstream (0 first, then 1, a, a+1, ...).
namespace agq {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands come from different fields.
class FieldMismatch : public FieldError {
 public:
  using FieldError::FieldError;
};

class DivisionByZero : public FieldError {
 public:
  using FieldError::FieldError;
};

/// The field cannot serve the requested role (e.g. Frobenius x -> x^q on a
/// field of odd extension degree, or an invalid p/e pair).
class UnsupportedField : public FieldError {
 public:
  using FieldError::FieldError;
};

/// Canonical index of a field element.
using Symbol = std::uint32_t;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class Field;
class Felt;
using FieldPtr = std::shared_ptr<const Field>;

/// Serializable description of a field: {p, e, modulus: [c0..ce], primitive: [..]}.
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::vector<std::uint32_t> modulus;    // monic, c_0 first, length e + 1
  std::vector<std::uint32_t> primitive;  // coefficients of the generator, length e
};

void to_json(nlohmann::json& j, const FieldSpec& spec);
void from_json(const nlohmann::json& j, FieldSpec& spec);

/// Immutable field with precomputed log/antilog tables. Construct through
/// the `make` factories; instances are shared through FieldPtr and are safe
/// to use from several threads.
class Field {
 public:
  /// GF(p^e) with the built-in default modulus.
  static FieldPtr make(std::uint32_t p, std::uint32_t e);
  /// GF(p^e) with a caller-supplied monic irreducible modulus (c_0 first).
  static FieldPtr make(std::uint32_t p, std::uint32_t e,
                       std::vector<std::uint32_t> modulus);
  /// Field of the given prime-power order with the default modulus.
  static FieldPtr of_order(std::uint32_t order);
  static FieldPtr from_spec(const FieldSpec& spec);

  /// The default modulus used by `make(p, e)`.
  static std::vector<std::uint32_t> default_modulus(std::uint32_t p,
                                                    std::uint32_t e);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t size() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Symbol primitive() const { return order_ == 2 ? 1 : exp_[1]; }
  FieldSpec spec() const;

  Symbol add(Symbol a, Symbol b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t{a} * order_ + b];
    return add_digits(a, b);
  }
  Symbol neg(Symbol a) const { return neg_[a]; }
  Symbol sub(Symbol a, Symbol b) const { return add(a, neg_[b]); }
  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order_ - 1) s -= order_ - 1;
    return exp_[s];
  }
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
  Symbol pow(Symbol a, std::uint64_t k) const;

  /// Discrete log to the base `primitive()`; undefined for 0.
  std::uint32_t log(Symbol a) const { return log_[a]; }
  Symbol exp(std::uint64_t k) const { return exp_[k % (order_ - 1)]; }

  std::vector<std::uint32_t> coeffs(Symbol a) const;
  Symbol from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Embeds the prime-field element c (0 <= c < p).
  Symbol from_int(std::int64_t c) const;

  /// All elements in canonical order.
  std::vector<Felt> elements() const;

  Felt element(Symbol a) const;
  Felt zero() const;
  Felt one() const;
  Felt generator() const;

  // Quadratic structure GF(q) < GF(q^2), available when the degree is even.
  bool is_quadratic_extension() const { return e_ % 2 == 0; }
  /// q = p^(e/2); throws UnsupportedField for odd degree.
  std::uint32_t subfield_order() const;
  /// a -> a^q; an automorphism of order 2 fixing exactly GF(q).
  Symbol frobenius_q(Symbol a) const;
  bool in_subfield(Symbol a) const;
  /// The fixed set of frobenius_q in canonical order.
  const std::vector<Symbol>& subfield_elements() const;

  /// Human-readable polynomial form, e.g. "a^2+2a+1" ("0" for zero).
  std::string format(Symbol a) const;

 private:
  struct Token {};

 public:
  Field(Token, std::uint32_t p, std::uint32_t e,
        std::vector<std::uint32_t> modulus);

 private:
  Symbol add_digits(Symbol a, Symbol b) const;
  void require_quadratic() const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Symbol> exp_;  // exp_[i] = g^i, i < order - 1
  std::vector<std::uint32_t> log_;
  std::vector<Symbol> neg_;
  std::vector<Symbol> add_table_;  // order x order, small odd-p fields only
  std::vector<std::uint8_t> subfield_flag_;
  std::vector<Symbol> subfield_;
};

/// A field element bound to its field. The field must outlive the element.
/// A default-constructed Felt is unbound; arithmetic on it throws.
class Felt {
 public:
  Felt() = default;
  Felt(const Field* field, Symbol index) : field_(field), index_(index) {}

  const Field* field() const { return field_; }
  Symbol index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  std::vector<std::uint32_t> coeffs() const;

  Felt operator+(const Felt& o) const;
  Felt operator-(const Felt& o) const;
  Felt operator-() const;
  Felt operator*(const Felt& o) const;
  Felt operator/(const Felt& o) const;
  Felt& operator+=(const Felt& o) { return *this = *this + o; }
  Felt& operator*=(const Felt& o) { return *this = *this * o; }

  friend bool operator==(const Felt& a, const Felt& b) {
    return a.field_ == b.field_ && a.index_ == b.index_;
  }

  std::string to_string() const;

 private:
  const Field& checked_field() const;
  const Field& shared_field(const Felt& o) const;

  const Field* field_ = nullptr;
  Symbol index_ = 0;
};

Felt inv(const Felt& a);
Felt pow(const Felt& a, std::uint64_t k);
/// a^q for a in GF(q^2).
Felt frobenius_q(const Felt& a);

/// A pair GF(q) < GF(q^2) built from independently constructed fields with
/// an explicit embedding table.
class FieldTower {
 public:
  /// GF(p^s) inside GF(p^(2s)), both with default moduli.
  static FieldTower quadratic(std::uint32_t p, std::uint32_t s);
  /// Embeds `base` into `ext`; requires equal characteristic and
  /// degree(base) | degree(ext).
  FieldTower(FieldPtr base, FieldPtr ext);

  const FieldPtr& base() const { return base_; }
  const FieldPtr& ext() const { return ext_; }
  Symbol embed(Symbol a) const { return embed_[a]; }
  Felt embed(const Felt& a) const;

 private:
  FieldPtr base_;
  FieldPtr ext_;
  std::vector<Symbol> embed_;
};

/// Factors q = p^e; returns {0, 0} if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);

}  // namespace agq
