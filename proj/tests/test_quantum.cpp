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

#include <array>
#include <sstream>

#include <gtest/gtest.h>

#include "agq/quantum.hpp"
#include "oracles.hpp"

namespace agq {
namespace {

using Triple = std::array<std::int64_t, 3>;

Triple triple(const QuantumParams& p) { return {p.n, p.k, p.d}; }

TEST(FormulaParams, KnownTriples) {
  EXPECT_EQ(triple(theorem_params(3, 3, 3)), (Triple{9, 3, 3}));
  EXPECT_EQ(triple(theorem_params(5, 3, 8)), (Triple{25, 11, 6}));
  const auto p = theorem_params(3, 3, 4);
  EXPECT_EQ(triple(p), (Triple{9, 1, 4}));
  EXPECT_TRUE(p.singleton_ok());
  EXPECT_EQ(p.to_string(), "[[9,1,4]]_3");
}

TEST(FormulaParams, Tables) {
  std::vector<Triple> small, large;
  for (const auto& row : quantum_table(3, 3, 2, 4)) small.push_back(triple(row.params));
  for (const auto& row : quantum_table(5, 3, 4, 8)) large.push_back(triple(row.params));
  EXPECT_EQ(small, (std::vector<Triple>{{9, 5, 2}, {9, 3, 3}, {9, 1, 4}}));
  EXPECT_EQ(large, (std::vector<Triple>{{25, 19, 2}, {25, 17, 3}, {25, 15, 4}, {25, 13, 5}, {25, 11, 6}}));
  EXPECT_TRUE(quantum_table(3, 3, 5, 4).empty());
}

TEST(FormulaParams, AffineStructure) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    for (std::int64_t r = 0; r < 20; ++r) {
      const auto a = theorem_params(q, 3, r), b = theorem_params(q, 3, r + 1);
      EXPECT_EQ(a.k - b.k, 2);
      EXPECT_EQ(b.d - a.d, 1);
    }
  }
}

TEST(FormulaParams, InRangeRecordsSatisfySingleton) {
  for (std::uint32_t q : {3u, 5u}) {
    for (const auto& row : quantum_table(q, 3, q - 1, 2 * (q - 1))) {
      EXPECT_TRUE(row.params.in_range);
      EXPECT_TRUE(row.params.singleton_ok());
      EXPECT_TRUE(row.params.valid());
    }
  }
}

TEST(FormulaParams, FlagsNotErrors) {
  const auto out = theorem_params(3, 3, 10);
  EXPECT_FALSE(out.in_range);
  EXPECT_FALSE(out.k_nonnegative());
  EXPECT_FALSE(out.valid());
  // (q-1)(m-1) odd only for q = 2, m = 2 here.
  EXPECT_TRUE(theorem_params(3, 2, 1).integral);
  EXPECT_FALSE(theorem_params(2, 2, 1).integral);
  EXPECT_THROW(theorem_params(6, 3, 2), std::invalid_argument);
}

TEST(FormulaParams, KnownCodeNotes) {
  std::istringstream in("n,k,d,reference\n9,5,3,best known\n");
  const auto known = read_known_codes(in);
  ASSERT_EQ(known.size(), 1u);
  const auto rows = quantum_table(3, 3, 2, 2, known);
  ASSERT_EQ(rows.size(), 1u);
  ASSERT_FALSE(rows[0].notes.empty());
  EXPECT_NE(rows[0].notes.back().find("larger distance"), std::string::npos);
  std::istringstream bad("n,k,d\n9,x,3\n");
  EXPECT_THROW(read_known_codes(bad), std::invalid_argument);
}

TEST(FormulaParams, CsvAndJson) {
  std::ostringstream out;
  const auto rows = quantum_table(3, 3, 2, 3);
  write_quantum_table_csv(out, rows);
  EXPECT_EQ(out.str(), "q,m,r,n,k,d,singleton_ok,source\n3,3,2,9,5,2,true,formula\n"
                       "3,3,3,9,3,3,true,formula\n");
  const auto j = quantum_table_json(rows);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1].at("k"), 3);
}

TEST(FromCode, SyntheticIsotropicCode) {
  // Search GF(4)^4 for the first nonzero Hermitian-isotropic vector.
  const auto f = Field::make(2, 2);
  const oracle::SlowField o(2, f->modulus());
  std::vector<Symbol> iso;
  for (std::uint32_t v = 1; v < 256 && iso.empty(); ++v) {
    std::vector<Symbol> w{v & 3, (v >> 2) & 3, (v >> 4) & 3, (v >> 6) & 3};
    std::uint32_t acc = 0;
    for (auto s : w) acc = o.add(acc, o.mul(s, o.pow(s, 2)));
    if (acc == 0) iso = w;
  }
  ASSERT_FALSE(iso.empty());
  Matrix g(f, 1, 4);
  for (std::size_t i = 0; i < 4; ++i) g(0, i) = iso[i];
  const auto code = LinearCode::from_generator(g, "isotropic");
  const auto p = from_self_orthogonal(code);
  EXPECT_EQ(p.n, 4);
  EXPECT_EQ(p.k, 2);
  EXPECT_EQ(p.q, 2u);
  EXPECT_TRUE(p.d_verified);
  EXPECT_EQ(p.source, QuantumParams::Source::kDerivedFromCode);
  EXPECT_EQ(static_cast<std::uint64_t>(p.d), *min_distance_bruteforce(hermitian_dual(code)).d);
}

TEST(FromCode, ZeroCodeIsDegenerate) {
  const auto p = from_self_orthogonal(LinearCode::zero(Field::make(3, 2), 5));
  EXPECT_TRUE(p.degenerate);
  EXPECT_EQ(p.k, 5);
  EXPECT_EQ(p.d, 1);
}

TEST(FromCode, RejectsNonSelfOrthogonal) {
  const auto f = Field::make(3, 2);
  const auto full = LinearCode::from_generator(Matrix::identity(f, 2), "identity");
  try {
    from_self_orthogonal(full);
    FAIL() << "expected NotSelfOrthogonal";
  } catch (const NotSelfOrthogonal& e) {
    EXPECT_LT(e.rows().first, 2u);
  }
}

TEST(FromCode, DimensionIsNMinusTwiceRank) {
  const Curve c(CurveSpec::superelliptic(3, 3));
  for (std::int64_t r = 0; r <= 4; ++r) {
    const auto code = build_onepoint_code(c, r);
    if (!is_hermitian_self_orthogonal(code)) continue;
    const auto p = from_self_orthogonal(code);
    EXPECT_EQ(p.k, static_cast<std::int64_t>(code.length()) - 2 * static_cast<std::int64_t>(rank(code.generator())));
    EXPECT_EQ(p.n, static_cast<std::int64_t>(code.length()));
  }
}

TEST(FromCode, BudgetFallsBackToDesignedBound) {
  const auto f = Field::make(2, 2);
  const auto code = LinearCode::from_generator(Matrix::from_rows(f, {{1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}, 12), "iso");
  const auto p = from_self_orthogonal(code, 16);
  EXPECT_FALSE(p.d_verified);
  EXPECT_EQ(p.d, 1);
}

}  // namespace
}  // namespace agq
