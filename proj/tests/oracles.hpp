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

// Independent reference implementations used only by the tests. Nothing
// here calls into the library's arithmetic tables or linear algebra; the
// only shared input is the modulus polynomial.

#include <cstdint>
#include <utility>
#include <vector>

namespace agq::oracle {

/// GF(p^e) by schoolbook polynomial multiplication and long division.
class SlowField {
 public:
  SlowField(std::uint32_t p, std::vector<std::uint32_t> modulus)
      : p_(p), e_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
    order_ = 1;
    for (std::uint32_t i = 0; i < e_; ++i) order_ *= p_;
  }

  std::uint32_t size() const { return order_; }
  std::uint32_t p() const { return p_; }

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(e_);
    for (auto& c : d) {
      c = a % p_;
      a /= p_;
    }
    return d;
  }
  std::uint32_t index(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (std::uint32_t i = 0; i < e_; ++i) x[i] = (x[i] + y[i]) % p_;
    return index(x);
  }
  std::uint32_t neg(std::uint32_t a) const {
    auto x = digits(a);
    for (auto& c : x) c = (p_ - c) % p_;
    return index(x);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<std::uint64_t> prod(2 * e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
      for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    // Reduce by the monic modulus from the top down.
    for (std::size_t deg = prod.size(); deg-- > e_;) {
      const std::uint64_t c = prod[deg];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= e_; ++i) {
        prod[deg - e_ + i] = (prod[deg - e_ + i] + (p_ - c) * modulus_[i]) % p_;
      }
    }
    std::vector<std::uint32_t> r(e_);
    for (std::uint32_t i = 0; i < e_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return index(r);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  /// Exhaustive search.
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < order_; ++b) {
      if (mul(a, b) == 1) return b;
    }
    return 0;
  }

 private:
  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
};

using Rows = std::vector<std::vector<std::uint32_t>>;

/// Rank by plain Gaussian elimination over SlowField.
inline std::size_t rank(const SlowField& f, Rows rows) {
  std::size_t rk = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
    std::size_t piv = rk;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rk]);
    const auto inv = f.inv(rows[rk][c]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rk || rows[r][c] == 0) continue;
      const auto factor = f.mul(rows[r][c], inv);
      for (std::size_t j = 0; j < cols; ++j) {
        rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rk][j]));
      }
    }
    ++rk;
  }
  return rk;
}

/// Calls visit(codeword) for every message in mixed-radix order.
template <class Visit>
void for_each_codeword(const SlowField& f, const Rows& gen, std::size_t n, Visit visit) {
  std::vector<std::uint32_t> msg(gen.size(), 0);
  while (true) {
    std::vector<std::uint32_t> word(n, 0);
    for (std::size_t i = 0; i < gen.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(msg[i], gen[i][j]));
    }
    visit(word);
    std::size_t pos = 0;
    while (pos < msg.size() && ++msg[pos] == f.size()) msg[pos++] = 0;
    if (pos == msg.size()) return;
  }
}

inline std::vector<std::uint64_t> weight_distribution(const SlowField& f, const Rows& gen,
                                                      std::size_t n) {
  std::vector<std::uint64_t> hist(n + 1, 0);
  for_each_codeword(f, gen, n, [&](const std::vector<std::uint32_t>& w) {
    std::size_t wt = 0;
    for (auto s : w) wt += s != 0;
    ++hist[wt];
  });
  return hist;
}

/// Affine points of y^a + c*y = x^b + d*x by scanning all (x, y) pairs.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> scan_points(
    const SlowField& f, std::uint32_t y_exp, bool y_linear, std::uint32_t x_exp, bool x_linear) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pts;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    for (std::uint32_t y = 0; y < f.size(); ++y) {
      auto lhs = f.pow(y, y_exp);
      if (y_linear) lhs = f.add(lhs, y);
      auto rhs = f.pow(x, x_exp);
      if (x_linear) rhs = f.add(rhs, x);
      if (lhs == rhs) pts.emplace_back(x, y);
    }
  }
  return pts;
}

}  // namespace agq::oracle
