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

#include "agq/quantum.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace agq {

NotSelfOrthogonal::NotSelfOrthogonal(std::size_t row_i, std::size_t row_j)
    : std::invalid_argument(fmt::format(
          "code is not Hermitian self-orthogonal: rows {} and {} have nonzero product", row_i,
          row_j)),
      rows_(row_i, row_j) {}

std::string to_string(QuantumParams::Source source) {
  return source == QuantumParams::Source::kFormula ? "formula" : "derived-from-code";
}

std::string QuantumParams::to_string() const {
  return fmt::format("[[{},{},{}]]_{}", n, k, d, q);
}

void to_json(nlohmann::json& j, const QuantumParams& p) {
  j = nlohmann::json{{"q", p.q},
                     {"n", p.n},
                     {"k", p.k},
                     {"d", p.d},
                     {"source", to_string(p.source)},
                     {"d_verified", p.d_verified},
                     {"degenerate", p.degenerate},
                     {"singleton_ok", p.singleton_ok()},
                     {"k_nonnegative", p.k_nonnegative()},
                     {"valid", p.valid()}};
  if (p.source == QuantumParams::Source::kFormula) {
    j["m"] = p.m;
    j["r"] = p.r;
    j["in_range"] = p.in_range;
    j["integral"] = p.integral;
  }
}

QuantumParams from_self_orthogonal(const LinearCode& code, std::uint64_t budget,
                                   unsigned threads) {
  const Field& f = code.field();
  const auto check = check_hermitian_self_orthogonal(code);
  if (!check.holds) throw NotSelfOrthogonal(check.violation->first, check.violation->second);

  QuantumParams out;
  out.q = f.subfield_order();
  out.source = QuantumParams::Source::kDerivedFromCode;
  out.n = static_cast<std::int64_t>(code.length());
  out.k = out.n - 2 * static_cast<std::int64_t>(code.dimension());
  out.degenerate = code.dimension() == 0;

  const LinearCode hdual = hermitian_dual(code);
  const DistanceResult dist = min_distance_bruteforce(hdual, budget, threads);
  if (dist.d) {
    out.d = static_cast<std::int64_t>(*dist.d);
    out.d_verified = true;
    return out;
  }
  // Designed bound for the superelliptic one-point family, else 1.
  out.d = 1;
  if (const auto& origin = code.origin();
      origin && origin->curve.family == CurveFamily::kSuperelliptic) {
    const std::int64_t q = origin->curve.q, m = origin->curve.m;
    out.d = std::max<std::int64_t>(1, origin->r - (q - 1) * (m - 1) / 2 + 2);
  }
  return out;
}

QuantumParams theorem_params(std::uint32_t q, std::uint32_t m, std::int64_t r) {
  if (prime_power(q).first == 0) {
    throw std::invalid_argument(fmt::format("q = {} is not a prime power", q));
  }
  QuantumParams p;
  p.q = q;
  p.m = m;
  p.r = r;
  p.source = QuantumParams::Source::kFormula;
  const std::int64_t qq = q, twice_shift = (qq - 1) * (static_cast<std::int64_t>(m) - 1);
  p.integral = twice_shift % 2 == 0;
  const std::int64_t shift = twice_shift / 2;
  p.in_range = r >= qq - 1 && r <= 2 * (qq - 1);
  p.n = qq * qq;
  p.k = qq * qq + shift - 2 - 2 * r;
  p.d = r - shift + 2;
  return p;
}

std::vector<KnownCode> read_known_codes(std::istream& in) {
  std::vector<KnownCode> out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("n,", 0) == 0) continue;
    }
    std::istringstream ls(line);
    KnownCode c;
    std::string field;
    std::vector<std::string> cols;
    while (std::getline(ls, field, ',')) cols.push_back(field);
    if (cols.size() < 3) throw std::invalid_argument("known-codes row needs n,k,d[,reference]");
    try {
      c.n = std::stoll(cols[0]);
      c.k = std::stoll(cols[1]);
      c.d = std::stoll(cols[2]);
    } catch (const std::exception&) {
      throw std::invalid_argument(fmt::format("bad known-codes row '{}'", line));
    }
    if (cols.size() > 3) c.reference = cols[3];
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<QuantumTableRow> quantum_table(std::uint32_t q, std::uint32_t m, std::int64_t r_min,
                                           std::int64_t r_max,
                                           const std::vector<KnownCode>& known) {
  std::vector<QuantumTableRow> rows;
  for (std::int64_t r = r_min; r <= r_max; ++r) {
    QuantumTableRow row{theorem_params(q, m, r), {}};
    const auto& p = row.params;
    if (!p.in_range) row.notes.push_back("r outside [q-1, 2(q-1)]");
    if (!p.singleton_ok()) row.notes.push_back("violates k + 2d <= n + 2");
    if (!p.valid()) row.notes.push_back("invalid parameters");
    for (const auto& c : known) {
      if (c.n != p.n) continue;
      const std::string ref = c.reference.empty() ? "" : " (" + c.reference + ")";
      if (c.k == p.k && c.d != p.d) {
        row.notes.push_back(fmt::format("known [[{},{},{}]]{} has {} distance", c.n, c.k, c.d, ref,
                                        c.d > p.d ? "larger" : "smaller"));
      } else if (c.d == p.d && c.k != p.k) {
        row.notes.push_back(fmt::format("known [[{},{},{}]]{} has {} dimension", c.n, c.k, c.d,
                                        ref, c.k > p.k ? "larger" : "smaller"));
      } else if (c.k == p.k && c.d == p.d) {
        row.notes.push_back(fmt::format("matches known [[{},{},{}]]{}", c.n, c.k, c.d, ref));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_quantum_table_csv(std::ostream& out, const std::vector<QuantumTableRow>& rows) {
  out << "q,m,r,n,k,d,singleton_ok,source\n";
  for (const auto& row : rows) {
    const auto& p = row.params;
    out << fmt::format("{},{},{},{},{},{},{},{}\n", p.q, p.m, p.r, p.n, p.k, p.d,
                       p.singleton_ok() ? "true" : "false", to_string(p.source));
  }
}

nlohmann::json quantum_table_json(const std::vector<QuantumTableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j = row.params;
    j["notes"] = row.notes;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace agq
