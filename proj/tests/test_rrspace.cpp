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

#include <algorithm>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "agq/rrspace.hpp"
#include "oracles.hpp"

namespace agq {
namespace {

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Pairs exponents(const std::vector<Monomial>& ms) {
  Pairs out;
  for (const auto& m : ms) out.emplace_back(m.i, m.j);
  return out;
}

// Counts (i, j) with i*a + j*b <= r, 0 <= j <= jmax by direct double loop.
std::uint64_t count_pairs(std::int64_t a, std::int64_t b, std::int64_t jmax, std::int64_t r) {
  std::uint64_t n = 0;
  for (std::int64_t i = 0; i * a <= r; ++i) {
    for (std::int64_t j = 0; j <= jmax; ++j) n += i * a + j * b <= r;
  }
  return n;
}

oracle::Rows eval_rows(const Curve& c, const std::vector<Monomial>& ms,
                       const std::vector<CurvePoint>& pts) {
  const oracle::SlowField o(c.field().characteristic(), c.field().modulus());
  oracle::Rows rows;
  for (const auto& m : ms) {
    std::vector<std::uint32_t> row;
    for (const auto& p : pts) row.push_back(o.mul(o.pow(p.x.index(), m.i), o.pow(p.y.index(), m.j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

TEST(Candidates, HermitianQ2) {
  const auto b = candidate_monomials(CurveSpec::hermitian(2), 3);
  EXPECT_EQ(exponents(b.monomials), (Pairs{{0, 0}, {1, 0}, {0, 1}}));
}

TEST(Candidates, SuperellipticSmall) {
  const auto spec = CurveSpec::superelliptic(3, 3);
  EXPECT_EQ(exponents(candidate_monomials(spec, 2).monomials), (Pairs{{0, 0}, {1, 0}}));
  EXPECT_TRUE(candidate_monomials(spec, -1).monomials.empty());
  EXPECT_EQ(monomial_count(spec, -1), 0u);
  EXPECT_EQ(monomial_count(spec, 2), 2u);
}

TEST(Candidates, OrderedAndBounded) {
  for (const auto& spec : {CurveSpec::superelliptic(3, 3), CurveSpec::superelliptic(5, 3),
                           CurveSpec::hermitian(3)}) {
    for (std::int64_t r = 0; r <= 40; ++r) {
      const auto ms = candidate_monomials(spec, r).monomials;
      EXPECT_EQ(ms.size(), monomial_count(spec, r));
      EXPECT_EQ(ms.size(), count_pairs(spec.pole_order_x, spec.pole_order_y, spec.q - 1, r));
      std::set<std::pair<std::uint32_t, std::uint32_t>> uniq;
      for (std::size_t k = 0; k < ms.size(); ++k) {
        EXPECT_LE(ms[k].pole_order, r);
        EXPECT_LE(ms[k].j, spec.q - 1);
        EXPECT_EQ(ms[k].pole_order, std::int64_t{ms[k].i} * spec.pole_order_x +
                                        std::int64_t{ms[k].j} * spec.pole_order_y);
        if (k > 0) EXPECT_LE(ms[k - 1].pole_order, ms[k].pole_order);
        uniq.emplace(ms[k].i, ms[k].j);
      }
      EXPECT_EQ(uniq.size(), ms.size());
    }
  }
}

TEST(Candidates, CountIncrementsBounded) {
  const auto spec = CurveSpec::superelliptic(3, 3);
  for (std::int64_t r = 0; r <= 20; ++r) {
    const auto step = monomial_count(spec, r) - monomial_count(spec, r - 1);
    EXPECT_LE(step, 3u);
  }
}

TEST(VerifiedBasis, HermitianKeepsAll) {
  const Curve c(CurveSpec::hermitian(2));
  const auto pts = c.affine_points();
  const auto b = verified_basis(c, 3, pts);
  EXPECT_TRUE(b.verified);
  EXPECT_EQ(b.monomials.size(), 3u);
  EXPECT_TRUE(b.dropped.empty());
}

TEST(VerifiedBasis, SaturatesAtPointCount) {
  const Curve c(CurveSpec::hermitian(2));
  const auto pts = c.affine_points();
  const auto b = verified_basis(c, 40, pts);
  EXPECT_EQ(b.monomials.size(), pts.size());
  EXPECT_FALSE(b.dropped.empty());
}

TEST(VerifiedBasis, SizeEqualsOracleRank) {
  for (const auto& spec : {CurveSpec::superelliptic(3, 3), CurveSpec::hermitian(3)}) {
    const Curve c(spec);
    const auto pts = c.affine_points();
    const oracle::SlowField o(c.field().characteristic(), c.field().modulus());
    for (std::int64_t r = 0; r <= 30; ++r) {
      const auto cands = candidate_monomials(spec, r).monomials;
      const auto b = verified_basis(c, r, pts);
      const auto full = oracle::rank(o, eval_rows(c, cands, pts));
      EXPECT_EQ(b.monomials.size(), full) << spec.describe() << " r=" << r;
      EXPECT_EQ(oracle::rank(o, eval_rows(c, b.monomials, pts)), b.monomials.size());
      EXPECT_EQ(b.monomials.size() + b.dropped.size(), cands.size());
    }
  }
}

TEST(VerifiedBasis, RiemannRoch) {
  for (const auto& spec : {CurveSpec::superelliptic(3, 3), CurveSpec::hermitian(2),
                           CurveSpec::hermitian(3)}) {
    const Curve c(spec);
    const auto pts = c.affine_points();
    const std::int64_t g = spec.genus(), n = static_cast<std::int64_t>(pts.size());
    for (std::int64_t r = 2 * g - 1; r < n; ++r) {
      if (r < 0) continue;
      EXPECT_EQ(static_cast<std::int64_t>(verified_basis(c, r, pts).monomials.size()), r + 1 - g)
          << spec.describe() << " r=" << r;
    }
  }
}

TEST(DimensionFormula, KnownCases) {
  const auto spec = CurveSpec::superelliptic(3, 3);
  EXPECT_EQ(dimension_formula(spec, -1).case_id, 1);
  EXPECT_EQ(dimension_formula(spec, -1).k_r, Rational(0));
  const auto two = dimension_formula(spec, 2);
  EXPECT_EQ(two.case_id, 2);
  EXPECT_EQ(two.k_r, Rational(2));
  // q^2 + (q-1)(m-1)/2 = 11
  const auto top = dimension_formula(spec, 12);
  EXPECT_EQ(top.case_id, 5);
  EXPECT_EQ(top.k_r, Rational(9));
  EXPECT_THROW(dimension_formula(CurveSpec::hermitian(2), 3), std::invalid_argument);
}

TEST(DimensionReport, RowsCoverRange) {
  const Curve c(CurveSpec::superelliptic(3, 3));
  const auto pts = c.affine_points();
  const auto rows = dimension_report(c, pts, 0, 30);
  ASSERT_EQ(rows.size(), 31u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.rank, row.verified_size);
    if (row.riemann_roch) EXPECT_EQ(static_cast<std::int64_t>(row.rank), *row.riemann_roch);
    EXPECT_EQ(row.formula_agrees,
              row.formula.integral() && row.formula.k_r == Rational(static_cast<std::int64_t>(row.rank)));
    const nlohmann::json j = row;
    EXPECT_EQ(j.at("r"), row.r);
  }
}

TEST(Semigroup, TwoThree) {
  const auto t = semigroup(CurveSpec::hermitian(2), 6);
  EXPECT_EQ(t.elements, (std::vector<std::uint32_t>{0, 2, 3, 4, 5, 6}));
  EXPECT_EQ(t.gaps, (std::vector<std::uint32_t>{1}));
  const auto s = semigroup(CurveSpec::superelliptic(3, 3), 6);
  EXPECT_EQ(s.elements, t.elements);
  EXPECT_EQ(s.gaps.size(), CurveSpec::superelliptic(3, 3).genus());
  const auto z = semigroup(CurveSpec::hermitian(2), 0);
  EXPECT_EQ(z.elements, (std::vector<std::uint32_t>{0}));
  EXPECT_TRUE(z.gaps.empty());
}

TEST(Semigroup, GapCountIsGenus) {
  for (const auto& spec : {CurveSpec::hermitian(3), CurveSpec::hermitian(4),
                           CurveSpec::superelliptic(3, 5), CurveSpec::superelliptic(7, 3)}) {
    const auto t = semigroup(spec, 2 * spec.genus() + 10);
    EXPECT_EQ(t.gaps.size(), spec.genus()) << spec.describe();
    std::set<std::uint32_t> el(t.elements.begin(), t.elements.end());
    for (auto a : t.elements) {
      for (auto b : t.elements) {
        if (a + b <= t.bound) EXPECT_TRUE(el.count(a + b));
      }
    }
  }
}

TEST(Semigroup, NonCoprimeGeneratorsRejected) {
  EXPECT_THROW(semigroup(CurveSpec::superelliptic(5, 3), 20), SemigroupError);
}

TEST(Semigroup, Csv) {
  std::ostringstream out;
  write_semigroup_csv(out, semigroup(CurveSpec::hermitian(2), 3));
  EXPECT_EQ(out.str(), "value,kind\n0,element\n1,gap\n2,element\n3,element\n");
}

}  // namespace
}  // namespace agq
