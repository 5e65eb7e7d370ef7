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

#include <set>

#include <gtest/gtest.h>

#include "agq/gf.hpp"
#include "oracles.hpp"

namespace agq {
namespace {

constexpr Symbol kAlpha = 2;         // x
constexpr Symbol kAlphaPlusOne = 3;  // x + 1, which is alpha^2

oracle::SlowField slow(const Field& f) { return {f.characteristic(), f.modulus()}; }

std::vector<std::pair<std::uint32_t, std::uint32_t>> small_fields() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 2; p <= 256; ++p) {
    if (!is_prime(p)) continue;
    std::uint32_t order = p;
    for (std::uint32_t e = 1; order <= 256; ++e, order *= p) out.emplace_back(p, e);
  }
  return out;
}

TEST(Gf4, MatchesDefiningRelation) {
  const auto f = Field::make(2, 2);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(f->add(kAlpha, kAlpha), 0u);
  EXPECT_EQ(f->add(kAlpha, 1), kAlphaPlusOne);
  EXPECT_EQ(f->mul(kAlpha, kAlpha), kAlphaPlusOne);
  EXPECT_EQ(f->mul(kAlpha, kAlphaPlusOne), 1u);
  EXPECT_EQ(f->inv(1), 1u);
  EXPECT_EQ(f->inv(kAlpha), kAlphaPlusOne);
  EXPECT_EQ(f->format(kAlphaPlusOne), "a+1");
}

TEST(Gf4, MultiplicationTableMatchesOracle) {
  const auto f = Field::make(2, 2);
  const auto o = slow(*f);
  for (Symbol a = 0; a < 4; ++a) {
    for (Symbol b = 0; b < 4; ++b) EXPECT_EQ(f->mul(a, b), o.mul(a, b)) << a << "*" << b;
  }
}

TEST(Gf4, CanonicalOrder) {
  const auto f = Field::make(2, 2);
  const auto els = f->elements();
  ASSERT_EQ(els.size(), 4u);
  EXPECT_EQ(els[0].coeffs(), (std::vector<std::uint32_t>{0, 0}));
  EXPECT_EQ(els[1].coeffs(), (std::vector<std::uint32_t>{1, 0}));
  EXPECT_EQ(els[2].coeffs(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(els[3].coeffs(), (std::vector<std::uint32_t>{1, 1}));
}

TEST(Gf9, AdditiveAndMultiplicativeInverses) {
  const auto f = Field::make(3, 2);
  for (Symbol a = 0; a < 9; ++a) {
    EXPECT_EQ(f->add(a, f->neg(a)), 0u);
    if (a != 0) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
  }
  std::set<Symbol> seen;
  for (const auto& e : f->elements()) seen.insert(e.index());
  EXPECT_EQ(seen.size(), 9u);
}

TEST(Gf16, ClosedUnderAddition) {
  const auto f = Field::make(2, 4);
  const auto els = f->elements();
  std::set<Symbol> all;
  for (const auto& e : els) all.insert(e.index());
  ASSERT_EQ(all.size(), 16u);
  for (const auto& a : els) {
    for (const auto& b : els) EXPECT_TRUE(all.count((a + b).index()));
  }
}

TEST(Field, TablesAgreeWithPolynomialOracle) {
  for (auto [p, e] : small_fields()) {
    const auto f = Field::make(p, e);
    const auto o = slow(*f);
    for (Symbol a = 0; a < f->size(); ++a) {
      for (Symbol b = 0; b < f->size(); ++b) {
        ASSERT_EQ(f->add(a, b), o.add(a, b)) << "GF(" << f->size() << ")";
        ASSERT_EQ(f->mul(a, b), o.mul(a, b)) << "GF(" << f->size() << ")";
      }
    }
  }
}

TEST(Field, AxiomsExhaustive) {
  for (auto [p, e] : small_fields()) {
    const auto f = Field::make(p, e);
    const Symbol q = f->size();
    for (Symbol a = 0; a < q; ++a) {
      ASSERT_EQ(f->mul(a, 1), a);
      ASSERT_EQ(f->add(a, 0), a);
      if (a != 0) ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
      for (Symbol b = 0; b < q; ++b) {
        const Symbol ab = f->mul(a, b), apb = f->add(a, b);
        ASSERT_EQ(ab, f->mul(b, a));
        for (Symbol c = 0; c < q; ++c) {
          ASSERT_EQ(f->mul(ab, c), f->mul(a, f->mul(b, c)));
          ASSERT_EQ(f->add(apb, c), f->add(a, f->add(b, c)));
          ASSERT_EQ(f->mul(apb, c), f->add(f->mul(a, c), f->mul(b, c)));
        }
      }
    }
  }
}

TEST(Field, PrimitiveElementGeneratesEverything) {
  for (auto [p, e] : small_fields()) {
    const auto f = Field::make(p, e);
    std::set<Symbol> orbit;
    Symbol x = 1;
    for (std::uint32_t i = 0; i + 1 < f->size(); ++i) {
      orbit.insert(x);
      x = f->mul(x, f->primitive());
    }
    EXPECT_EQ(x, 1u);
    EXPECT_EQ(orbit.size(), f->size() - 1) << "GF(" << f->size() << ")";
  }
}

TEST(Field, LargestSupportedOrder) {
  const auto f = Field::make(2, 16);
  EXPECT_EQ(f->size(), 65536u);
  EXPECT_EQ(f->pow(f->primitive(), 65535), 1u);
  EXPECT_NE(f->pow(f->primitive(), 65535 / 3), 1u);
  EXPECT_NE(f->pow(f->primitive(), 65535 / 5), 1u);
  EXPECT_NE(f->pow(f->primitive(), 65535 / 17), 1u);
  EXPECT_NE(f->pow(f->primitive(), 65535 / 257), 1u);
  EXPECT_THROW(Field::make(2, 17), UnsupportedField);
  EXPECT_THROW(Field::make(257, 2), UnsupportedField);
}

TEST(Field, Errors) {
  EXPECT_THROW(Field::make(4, 2), FieldError);
  EXPECT_THROW(Field::make(2, 0), FieldError);
  EXPECT_THROW(Field::of_order(6), FieldError);
  // x^2 + 1 = (x + 1)^2 over GF(2)
  EXPECT_THROW(Field::make(2, 2, {1, 0, 1}), FieldError);
  const auto f = Field::make(2, 2);
  EXPECT_THROW(f->inv(0), DivisionByZero);
  EXPECT_THROW(f->element(1) / f->zero(), DivisionByZero);
  const auto g = Field::make(3, 2);
  EXPECT_THROW(f->one() + g->one(), FieldMismatch);
  EXPECT_THROW(Field::make(2, 3)->frobenius_q(1), UnsupportedField);
}

TEST(Field, UserModulusAccepted) {
  // x^2 + x + 2 is irreducible over GF(3)
  const auto f = Field::make(3, 2, {2, 1, 1});
  const auto o = slow(*f);
  for (Symbol a = 0; a < 9; ++a) {
    for (Symbol b = 0; b < 9; ++b) EXPECT_EQ(f->mul(a, b), o.mul(a, b));
  }
}

TEST(Field, PrimeFieldModulusIsLinear) {
  const auto f = Field::make(3, 1);
  EXPECT_EQ(f->modulus().size(), 2u);
  EXPECT_EQ(f->size(), 3u);
  EXPECT_EQ(f->mul(2, 2), 1u);
}

TEST(Field, SpecJsonRoundTrip) {
  const auto f = Field::make(5, 2);
  const nlohmann::json j = f->spec();
  EXPECT_EQ(j.at("p"), 5);
  EXPECT_EQ(j.at("e"), 2);
  const auto g = Field::from_spec(j.get<FieldSpec>());
  EXPECT_EQ(g->modulus(), f->modulus());
  EXPECT_EQ(g->primitive(), f->primitive());
}

TEST(Frobenius, Gf4SquaresAlpha) {
  const auto f = Field::make(2, 2);
  EXPECT_EQ(f->frobenius_q(kAlpha), slow(*f).pow(kAlpha, 2));
  EXPECT_EQ(f->frobenius_q(kAlpha), kAlphaPlusOne);
}

TEST(Frobenius, InvolutionFixingSubfield) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
    const auto tower = FieldTower::quadratic(prime_power(q).first, prime_power(q).second);
    const Field& f = *tower.ext();
    const auto o = slow(f);
    std::set<Symbol> image, fixed;
    for (Symbol a = 0; a < tower.base()->size(); ++a) image.insert(tower.embed(a));
    for (Symbol a = 0; a < f.size(); ++a) {
      const Symbol fa = f.frobenius_q(a);
      EXPECT_EQ(fa, o.pow(a, q));
      EXPECT_EQ(f.frobenius_q(fa), a);
      if (fa == a) fixed.insert(a);
      EXPECT_EQ(f.in_subfield(a), fa == a);
      for (Symbol b = 0; b < f.size(); ++b) {
        ASSERT_EQ(f.frobenius_q(f.mul(a, b)), f.mul(fa, f.frobenius_q(b)));
        ASSERT_EQ(f.frobenius_q(f.add(a, b)), f.add(fa, f.frobenius_q(b)));
      }
    }
    EXPECT_EQ(fixed, image) << "q=" << q;
    EXPECT_EQ(fixed.size(), q);
    EXPECT_EQ(f.subfield_order(), q);
  }
}

TEST(Tower, EmbeddingIsHomomorphism) {
  const auto tower = FieldTower::quadratic(3, 1);
  const Field& base = *tower.base();
  const Field& ext = *tower.ext();
  EXPECT_EQ(tower.embed(0), 0u);
  EXPECT_EQ(tower.embed(1), 1u);
  for (Symbol a = 0; a < 3; ++a) {
    for (Symbol b = 0; b < 3; ++b) {
      EXPECT_EQ(tower.embed(base.mul(a, b)), ext.mul(tower.embed(a), tower.embed(b)));
      EXPECT_EQ(tower.embed(base.add(a, b)), ext.add(tower.embed(a), tower.embed(b)));
    }
  }
}

TEST(Tower, NonPrimeBaseEmbedding) {
  const auto tower = FieldTower::quadratic(2, 2);
  const Field& base = *tower.base();
  const Field& ext = *tower.ext();
  ASSERT_EQ(ext.size(), 16u);
  for (Symbol a = 0; a < 4; ++a) {
    EXPECT_TRUE(ext.in_subfield(tower.embed(a)));
    for (Symbol b = 0; b < 4; ++b) {
      EXPECT_EQ(tower.embed(base.mul(a, b)), ext.mul(tower.embed(a), tower.embed(b)));
      EXPECT_EQ(tower.embed(base.add(a, b)), ext.add(tower.embed(a), tower.embed(b)));
    }
  }
}

TEST(Tower, IncompatibleFieldsRejected) {
  EXPECT_THROW(FieldTower(Field::make(3, 1), Field::make(2, 2)), FieldError);
  EXPECT_THROW(FieldTower(Field::make(2, 2), Field::make(2, 3)), FieldError);
}

TEST(PrimePower, Decomposition) {
  EXPECT_EQ(prime_power(9), (std::pair<std::uint32_t, std::uint32_t>{3, 2}));
  EXPECT_EQ(prime_power(7), (std::pair<std::uint32_t, std::uint32_t>{7, 1}));
  EXPECT_EQ(prime_power(12).first, 0u);
  EXPECT_EQ(prime_power(1).first, 0u);
}

}  // namespace
}  // namespace agq
