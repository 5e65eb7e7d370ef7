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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "agq/agcode.hpp"

// Stabilizer code parameters [[n, k, d]]_q from Hermitian self-orthogonal
// codes over GF(q^2).
namespace agq {

class NotSelfOrthogonal : public std::invalid_argument {
 public:
  NotSelfOrthogonal(std::size_t row_i, std::size_t row_j);
  std::pair<std::size_t, std::size_t> rows() const { return rows_; }

 private:
  std::pair<std::size_t, std::size_t> rows_;
};

struct QuantumParams {
  enum class Source { kFormula, kDerivedFromCode };

  std::uint32_t q = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;
  Source source = Source::kFormula;
  bool d_verified = false;  // brute-forced rather than designed
  bool degenerate = false;  // derived from the zero code

  // Formula records only.
  std::uint32_t m = 0;
  std::int64_t r = 0;
  bool in_range = true;  // q - 1 <= r <= 2(q - 1)
  bool integral = true;

  bool singleton_ok() const { return k + 2 * d <= n + 2; }
  bool k_nonnegative() const { return k >= 0; }
  bool valid() const { return k_nonnegative() && n >= 1 && d >= 1 && integral; }
  std::string to_string() const;
};

std::string to_string(QuantumParams::Source source);
void to_json(nlohmann::json& j, const QuantumParams& params);

/// [[n, n - 2k, d_perp]]_q from a Hermitian self-orthogonal [n, k] code
/// over GF(q^2). d_perp is the brute-forced distance of the Hermitian dual
/// when it has at most `budget` codewords, otherwise a designed lower bound
/// tagged unverified. Throws NotSelfOrthogonal naming a violating row pair.
QuantumParams from_self_orthogonal(const LinearCode& code,
                                   std::uint64_t budget = kDefaultCodewordBudget,
                                   unsigned threads = 0);

/// [[q^2, q^2 + (q-1)(m-1)/2 - 2 - 2r, r - (q-1)(m-1)/2 + 2]]_q evaluated
/// literally. Out-of-range r and a non-integral (q-1)(m-1)/2 are flagged, not
/// rejected. Throws std::invalid_argument when q is not a prime power.
QuantumParams theorem_params(std::uint32_t q, std::uint32_t m, std::int64_t r);

struct KnownCode {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;
  std::string reference;
};

/// CSV with header "n,k,d,reference".
std::vector<KnownCode> read_known_codes(std::istream& in);

struct QuantumTableRow {
  QuantumParams params;
  std::vector<std::string> notes;
};

/// One row per r in [r_min, r_max], ascending; empty when r_min > r_max.
std::vector<QuantumTableRow> quantum_table(std::uint32_t q, std::uint32_t m, std::int64_t r_min,
                                           std::int64_t r_max,
                                           const std::vector<KnownCode>& known = {});

/// Header "q,m,r,n,k,d,singleton_ok,source".
void write_quantum_table_csv(std::ostream& out, const std::vector<QuantumTableRow>& rows);
nlohmann::json quantum_table_json(const std::vector<QuantumTableRow>& rows);

}  // namespace agq
