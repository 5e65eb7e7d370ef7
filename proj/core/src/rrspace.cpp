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

#include "agq/rrspace.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <tuple>

#include <fmt/format.h>

namespace agq {

std::uint32_t max_y_power(const CurveSpec& spec) { return spec.q - 1; }

MonomialBasis candidate_monomials(const CurveSpec& spec, std::int64_t r) {
  MonomialBasis basis;
  basis.r = r;
  if (r < 0) return basis;
  const std::int64_t rx = spec.pole_order_x, ry = spec.pole_order_y;
  for (std::uint32_t j = 0; j <= max_y_power(spec); ++j) {
    if (j * ry > r) break;
    for (std::uint32_t i = 0; i * rx + j * ry <= r; ++i) {
      basis.monomials.push_back({i, j, i * rx + j * ry});
    }
  }
  std::sort(basis.monomials.begin(), basis.monomials.end(),
            [](const Monomial& a, const Monomial& b) {
              return std::tie(a.pole_order, a.i, a.j) < std::tie(b.pole_order, b.i, b.j);
            });
  return basis;
}

std::uint64_t monomial_count(const CurveSpec& spec, std::int64_t r) {
  if (r < 0) return 0;
  std::uint64_t count = 0;
  for (std::int64_t j = 0; j <= static_cast<std::int64_t>(max_y_power(spec)); ++j) {
    const std::int64_t rest = r - j * spec.pole_order_y;
    if (rest < 0) break;
    count += static_cast<std::uint64_t>(rest / spec.pole_order_x + 1);
  }
  return count;
}

Symbol evaluate_monomial(const Field& f, const Monomial& mono, const CurvePoint& pt) {
  if (pt.is_infinity()) throw CurveError("monomials have a pole at infinity");
  return f.mul(f.pow(pt.x.index(), mono.i), f.pow(pt.y.index(), mono.j));
}

Matrix evaluation_matrix(const Curve& curve, std::span<const Monomial> monomials,
                         std::span<const CurvePoint> points) {
  const Field& f = curve.field();
  Matrix m(curve.field_ptr(), monomials.size(), points.size());
  for (std::size_t r = 0; r < monomials.size(); ++r) {
    for (std::size_t c = 0; c < points.size(); ++c) {
      m(r, c) = evaluate_monomial(f, monomials[r], points[c]);
    }
  }
  return m;
}

namespace {

// Incremental independence test: keeps a reduced set of rows with distinct
// leading columns.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(const Field& f) : f_(f) {}

  bool try_add(std::vector<Symbol> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Symbol c = v[leads_[k]];
      if (c == 0) continue;
      const Symbol factor = f_.neg(c);
      for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = f_.add(v[j], f_.mul(factor, rows_[k][j]));
      }
    }
    const auto it = std::find_if(v.begin(), v.end(), [](Symbol s) { return s != 0; });
    if (it == v.end()) return false;
    const Symbol scale = f_.inv(*it);
    for (auto& s : v) s = f_.mul(s, scale);
    leads_.push_back(static_cast<std::size_t>(it - v.begin()));
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  const Field& f_;
  std::vector<std::vector<Symbol>> rows_;
  std::vector<std::size_t> leads_;
};

}  // namespace

MonomialBasis verified_basis(const Curve& curve, std::int64_t r,
                             std::span<const CurvePoint> points) {
  if (points.empty()) throw CurveError("evaluation set is empty");
  MonomialBasis candidates = candidate_monomials(curve.spec(), r);
  MonomialBasis out;
  out.r = r;
  out.verified = true;
  IncrementalBasis acc(curve.field());
  for (const auto& mono : candidates.monomials) {
    std::vector<Symbol> v(points.size());
    for (std::size_t c = 0; c < points.size(); ++c) {
      v[c] = evaluate_monomial(curve.field(), mono, points[c]);
    }
    (acc.try_add(std::move(v)) ? out.monomials : out.dropped).push_back(mono);
  }
  return out;
}

void to_json(nlohmann::json& j, const MonomialBasis& basis) {
  auto pairs = [](const std::vector<Monomial>& ms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : ms) arr.push_back({m.i, m.j});
    return arr;
  };
  j = nlohmann::json{{"r", basis.r},
                     {"monomials", pairs(basis.monomials)},
                     {"dropped", pairs(basis.dropped)},
                     {"verified", basis.verified}};
}

DimensionFormula dimension_formula(const CurveSpec& spec, std::int64_t r) {
  if (spec.family != CurveFamily::kSuperelliptic) {
    throw CurveError("the closed-form dimension applies to the superelliptic family only");
  }
  const std::int64_t q = spec.q, m = spec.m;
  const Rational half(((q - 1) * (m - 1)), 2);  // (q-1)(m-1)/2
  const Rational quarter(((q - 1) * (m - 1)), 4);
  const std::int64_t q2 = q * q;
  auto count = [&](const Rational& x) -> Rational {
    // T of a non-integral argument counts up to its floor.
    const std::int64_t fl = x.numerator() >= 0
                                ? x.numerator() / x.denominator()
                                : -((-x.numerator() + x.denominator() - 1) / x.denominator());
    return Rational(static_cast<std::int64_t>(monomial_count(spec, fl)));
  };

  const Rational rr(r);
  if (r < 0) return {1, Rational(0)};
  if (rr <= half) return {2, count(rr)};
  if (rr < Rational(q2)) return {3, rr * (q + 1) - quarter};
  if (rr <= Rational(q2) + half) return {4, Rational(q2) - count(Rational(q2) + half - rr)};
  return {5, Rational(q2)};
}

std::vector<DimensionComparison> dimension_report(const Curve& curve,
                                                  std::span<const CurvePoint> points,
                                                  std::int64_t r_min, std::int64_t r_max) {
  const auto& spec = curve.spec();
  const std::int64_t g = curve.genus();
  const auto npts = static_cast<std::int64_t>(points.size());
  std::vector<DimensionComparison> rows;
  for (std::int64_t r = r_min; r <= r_max; ++r) {
    DimensionComparison row;
    row.r = r;
    const auto cand = candidate_monomials(spec, r);
    row.candidates = cand.monomials.size();
    row.rank = cand.monomials.empty()
                   ? 0
                   : rank(evaluation_matrix(curve, cand.monomials, points));
    row.verified_size = r < 0 ? 0 : verified_basis(curve, r, points).monomials.size();
    if (r > 2 * g - 2 && r < npts) row.riemann_roch = r + 1 - g;
    if (spec.family == CurveFamily::kSuperelliptic) {
      row.formula = dimension_formula(spec, r);
      row.formula_agrees = row.formula.k_r == Rational(static_cast<std::int64_t>(row.rank));
    }
    rows.push_back(row);
  }
  return rows;
}

void to_json(nlohmann::json& j, const DimensionComparison& row) {
  j = nlohmann::json{{"r", row.r},
                     {"candidates", row.candidates},
                     {"rank", row.rank},
                     {"verified_size", row.verified_size},
                     {"formula_case", row.formula.case_id},
                     {"formula_k", fmt::format("{}/{}", row.formula.k_r.numerator(),
                                               row.formula.k_r.denominator())},
                     {"formula_integral", row.formula.integral()},
                     {"formula_agrees", row.formula_agrees}};
  j["riemann_roch"] = row.riemann_roch ? nlohmann::json(*row.riemann_roch) : nlohmann::json();
}

SemigroupTable semigroup(const CurveSpec& spec, std::uint32_t bound) {
  const std::uint32_t a = spec.pole_order_x, b = spec.pole_order_y;
  if (std::gcd(a, b) != 1) {
    throw SemigroupError(fmt::format(
        "<{}, {}> has infinitely many gaps (generators not coprime)", a, b));
  }
  SemigroupTable table{a, b, bound, {}, {}};
  std::vector<bool> member(bound + 1, false);
  member[0] = true;
  for (std::uint32_t v = 1; v <= bound; ++v) {
    member[v] = (v >= a && member[v - a]) || (v >= b && member[v - b]);
  }
  for (std::uint32_t v = 0; v <= bound; ++v) {
    (member[v] ? table.elements : table.gaps).push_back(v);
  }
  return table;
}

void write_semigroup_csv(std::ostream& out, const SemigroupTable& table) {
  out << "value,kind\n";
  std::size_t ei = 0, gi = 0;
  for (std::uint32_t v = 0; v <= table.bound; ++v) {
    if (ei < table.elements.size() && table.elements[ei] == v) {
      out << v << ",element\n";
      ++ei;
    } else if (gi < table.gaps.size() && table.gaps[gi] == v) {
      out << v << ",gap\n";
      ++gi;
    }
  }
}

}  // namespace agq
