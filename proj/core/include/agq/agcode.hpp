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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "agq/curve.hpp"
#include "agq/linalg.hpp"
#include "agq/rrspace.hpp"

namespace agq {

/// Default cap on the number of codewords enumerated by brute force.
inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t{1} << 20;

class CodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankDeficient : public CodeError {
 public:
  RankDeficient(std::size_t rank, std::size_t rows);
  std::size_t rank() const { return rank_; }
  std::size_t rows() const { return rows_; }

 private:
  std::size_t rank_;
  std::size_t rows_;
};

class BudgetExceeded : public CodeError {
 public:
  using CodeError::CodeError;
};

/// Which affine points of the curve form the evaluation divisor D.
class EvalSet {
 public:
  static EvalSet all_affine() { return EvalSet(Kind::kAll, 0, {}); }
  /// The first `count` affine points in canonical order.
  static EvalSet first(std::size_t count) { return EvalSet(Kind::kFirst, count, {}); }
  /// Affine points by position in the canonical affine enumeration.
  static EvalSet indices(std::vector<std::size_t> idx) {
    return EvalSet(Kind::kIndices, 0, std::move(idx));
  }

  std::vector<CurvePoint> select(const Curve& curve) const;
  std::string describe() const;

 private:
  enum class Kind { kAll, kFirst, kIndices };
  EvalSet(Kind kind, std::size_t count, std::vector<std::size_t> idx)
      : kind_(kind), count_(count), idx_(std::move(idx)) {}

  Kind kind_;
  std::size_t count_;
  std::vector<std::size_t> idx_;
};

/// Where a one-point code came from: L(r P_inf) evaluated on an EvalSet.
struct CodeOrigin {
  CurveSpec curve;
  std::int64_t r = 0;
  MonomialBasis basis;
};

/// A linear [n, k] code over a finite field with a full-rank generator and
/// its parity-check matrix. Immutable after construction.
class LinearCode {
 public:
  /// Throws RankDeficient unless `generator` has full row rank.
  static LinearCode from_generator(Matrix generator, std::string source);
  static LinearCode zero(FieldPtr field, std::size_t n);

  const FieldPtr& field_ptr() const { return generator_.field(); }
  const Field& field() const { return *generator_.field(); }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }
  const Matrix& parity_check() const { return parity_check_; }
  const std::vector<CurvePoint>& points() const { return points_; }
  const std::string& source() const { return source_; }
  const std::optional<CodeOrigin>& origin() const { return origin_; }

  /// n - deg(G) for one-point codes.
  std::optional<std::int64_t> designed_distance() const;

  std::string name() const;

 private:
  friend LinearCode build_onepoint_code(const Curve&, std::int64_t, const EvalSet&);
  LinearCode(Matrix generator, Matrix parity_check, std::string source);

  Matrix generator_;
  Matrix parity_check_;
  std::vector<CurvePoint> points_;
  std::string source_;
  std::optional<CodeOrigin> origin_;
};

/// C(D, r P_inf): rows are evaluations of verified_basis() monomials at the
/// selected points. r < 0 gives the zero code.
LinearCode build_onepoint_code(const Curve& curve, std::int64_t r,
                               const EvalSet& eval_set = EvalSet::all_affine());

/// Euclidean dual.
LinearCode dual(const LinearCode& code);
/// {v : <v, c>_H = 0 for all c in code}.
LinearCode hermitian_dual(const LinearCode& code);

struct DistanceResult {
  enum class Method { kExact, kBoundsOnly, kEmpty };
  Method method = Method::kEmpty;
  std::optional<std::uint64_t> d;  // set iff method == kExact
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
};

std::string to_string(DistanceResult::Method method);

/// Number of codewords q^k, saturating at UINT64_MAX.
std::uint64_t codeword_count(const LinearCode& code);

/// Counts by Hamming weight over all q^k codewords. Throws BudgetExceeded
/// when q^k > budget. `threads` = 0 picks the hardware concurrency; the
/// result does not depend on it.
std::vector<std::uint64_t> weight_distribution(const LinearCode& code,
                                               std::uint64_t budget = kDefaultCodewordBudget,
                                               unsigned threads = 0);

/// Exact minimum distance when q^k <= budget, otherwise designed/Singleton
/// bounds. The zero code yields kEmpty.
DistanceResult min_distance_bruteforce(const LinearCode& code,
                                       std::uint64_t budget = kDefaultCodewordBudget,
                                       unsigned threads = 0);

/// sum_i a_i b_i^q over GF(q^2).
Symbol hermitian_inner(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b);
Felt hermitian_inner(std::span<const Felt> a, std::span<const Felt> b);

struct OrthogonalityCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // generator rows
};

/// <lambda g_i, g_j>_H = 0 for all row pairs and lambda over a GF(q)-basis
/// {1, w} of GF(q^2).
OrthogonalityCheck check_hermitian_self_orthogonal(const LinearCode& code);
bool is_hermitian_self_orthogonal(const LinearCode& code);
/// G * G^T = 0.
bool is_euclidean_self_orthogonal(const LinearCode& code);

/// Compares dual(C_r) with C_{r'}, r' = q^2 + (q-1)(m-1)/2 - r, on the same
/// evaluation set. Records the verdicts; never throws on disagreement.
struct DualityClaim {
  bool applicable = false;
  std::string note;
  std::int64_t r = 0;
  std::int64_t r_claimed = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t k_dual = 0;
  std::size_t k_claimed = 0;
  bool equal = false;
  bool claimed_in_dual = false;
  bool dual_in_claimed = false;
};

DualityClaim check_duality_claim(const Curve& curve, std::int64_t r,
                                 const EvalSet& eval_set = EvalSet::all_affine());
void to_json(nlohmann::json& j, const DualityClaim& claim);

// Matrix files: line 1 "q2=<size> n=<n> k=<k>", then k rows of n
// space-separated canonical field indices.

/// Throws RankDeficient for a rank-deficient generator and CodeError for
/// malformed input.
LinearCode load_explicit_code(std::istream& in, const std::string& source = "explicit");
LinearCode load_explicit_code(const std::filesystem::path& path);
/// Reads just the matrix (no rank requirement).
Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& m);

struct ReportOptions {
  std::uint64_t budget = kDefaultCodewordBudget;
  EvalSet eval_set = EvalSet::all_affine();
  bool weights = true;
  bool duality = true;
  unsigned threads = 0;
};

/// Hermitian self-orthogonality of C_r under two readings of r:
/// G = r P_inf and G = r(q+1) P_inf.
struct SelfOrthogonalityReading {
  std::int64_t pole_multiple = 0;
  std::size_t k = 0;
  bool hermitian_self_orthogonal = false;
};

struct CodeReport {
  std::string code;
  std::string curve;
  std::int64_t r = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t closed_form_length = 0;  // q^2, the length the closed forms assume
  DistanceResult distance;
  std::optional<std::int64_t> d_designed;
  bool singleton_ok = true;
  std::optional<bool> goppa_bound_ok;
  bool euclidean_self_orthogonal = false;
  bool hermitian_self_orthogonal = false;
  std::optional<std::vector<std::uint64_t>> weight_distribution;
  std::optional<DualityClaim> duality_claim;
  std::optional<DimensionComparison> dimension;
  bool orthogonality_range = false;  // r <= q - 1
  std::vector<SelfOrthogonalityReading> readings;
  MonomialBasis basis;
};

CodeReport make_code_report(const Curve& curve, std::int64_t r,
                            const ReportOptions& options = {});
void to_json(nlohmann::json& j, const CodeReport& report);
void to_json(nlohmann::json& j, const DistanceResult& d);

}  // namespace agq
