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
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include "agq/curve.hpp"
#include "agq/linalg.hpp"

// Riemann-Roch spaces L(r P_inf) spanned by monomials x^i y^j.
namespace agq {

struct Monomial {
  std::uint32_t i = 0;  // power of x
  std::uint32_t j = 0;  // power of y
  std::int64_t pole_order = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialBasis {
  std::int64_t r = 0;
  std::vector<Monomial> monomials;
  std::vector<Monomial> dropped;  // candidates removed by rank filtering
  bool verified = false;
};

/// {r, monomials: [[i, j], ...], dropped: [...]}
void to_json(nlohmann::json& j, const MonomialBasis& basis);

/// Largest power of y admitted in a candidate monomial (q - 1 for both
/// families).
std::uint32_t max_y_power(const CurveSpec& spec);

/// All x^i y^j with i*rho_x + j*rho_y <= r and 0 <= j <= q - 1, ordered by
/// pole order, then (i, j). Empty for negative r.
MonomialBasis candidate_monomials(const CurveSpec& spec, std::int64_t r);

/// Number of candidate monomials for r (0 for r < 0). Counted directly from
/// the inequality, independent of candidate_monomials().
std::uint64_t monomial_count(const CurveSpec& spec, std::int64_t r);

Symbol evaluate_monomial(const Field& f, const Monomial& mono, const CurvePoint& pt);

/// Rows are monomials, columns are points.
Matrix evaluation_matrix(const Curve& curve, std::span<const Monomial> monomials,
                         std::span<const CurvePoint> points);

/// Greedy subset of the candidates whose evaluation vectors are linearly
/// independent, scanned in candidate order.
MonomialBasis verified_basis(const Curve& curve, std::int64_t r,
                             std::span<const CurvePoint> points);

using Rational = boost::rational<std::int64_t>;

/// The five-case closed-form dimension k_r of the one-point code, evaluated
/// literally (case 3 as r(q+1) - (q-1)(m-1)/4).
struct DimensionFormula {
  int case_id = 0;
  Rational k_r{0};
  bool integral() const { return k_r.denominator() == 1; }
};

/// Superelliptic family only; throws CurveError for the Hermitian family.
DimensionFormula dimension_formula(const CurveSpec& spec, std::int64_t r);

/// One row of the formula-versus-rank comparison.
struct DimensionComparison {
  std::int64_t r = 0;
  std::uint64_t candidates = 0;
  std::uint64_t rank = 0;           // rank of the full candidate evaluation matrix
  std::uint64_t verified_size = 0;  // size of the greedy basis
  std::optional<std::int64_t> riemann_roch;  // r + 1 - g when 2g - 2 < r < n
  DimensionFormula formula;
  bool formula_agrees = false;
};

std::vector<DimensionComparison> dimension_report(const Curve& curve,
                                                  std::span<const CurvePoint> points,
                                                  std::int64_t r_min, std::int64_t r_max);
void to_json(nlohmann::json& j, const DimensionComparison& row);

class SemigroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SemigroupTable {
  std::uint32_t gen_a = 0;
  std::uint32_t gen_b = 0;
  std::uint32_t bound = 0;
  std::vector<std::uint32_t> elements;
  std::vector<std::uint32_t> gaps;
};

/// <rho_x, rho_y> intersected with [0, bound]. Throws SemigroupError when the
/// generators are not coprime (infinitely many gaps).
SemigroupTable semigroup(const CurveSpec& spec, std::uint32_t bound);

/// CSV "value,kind" with kind in {element, gap}.
void write_semigroup_csv(std::ostream& out, const SemigroupTable& table);

}  // namespace agq
