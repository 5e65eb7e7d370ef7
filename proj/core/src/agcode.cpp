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

#include "agq/agcode.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <thread>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace agq {

RankDeficient::RankDeficient(std::size_t rank, std::size_t rows)
    : CodeError(fmt::format("generator has rank {} but {} rows", rank, rows)),
      rank_(rank),
      rows_(rows) {}

std::vector<CurvePoint> EvalSet::select(const Curve& curve) const {
  auto affine = curve.affine_points();
  switch (kind_) {
    case Kind::kAll:
      return affine;
    case Kind::kFirst:
      if (count_ > affine.size()) {
        throw CodeError(fmt::format("requested {} points but the curve has {}", count_,
                                    affine.size()));
      }
      affine.resize(count_);
      return affine;
    case Kind::kIndices: {
      std::vector<CurvePoint> out;
      std::vector<bool> seen(affine.size(), false);
      for (auto i : idx_) {
        if (i >= affine.size()) throw CodeError(fmt::format("point index {} out of range", i));
        if (seen[i]) throw CodeError(fmt::format("point index {} repeated", i));
        seen[i] = true;
        out.push_back(affine[i]);
      }
      return out;
    }
  }
  return affine;
}

std::string EvalSet::describe() const {
  switch (kind_) {
    case Kind::kAll:
      return "all-affine";
    case Kind::kFirst:
      return fmt::format("first-{}", count_);
    case Kind::kIndices:
      return fmt::format("indices[{}]", fmt::join(idx_, " "));
  }
  return "";
}

// LinearCode

LinearCode::LinearCode(Matrix generator, Matrix parity_check, std::string source)
    : generator_(std::move(generator)),
      parity_check_(std::move(parity_check)),
      source_(std::move(source)) {}

LinearCode LinearCode::from_generator(Matrix generator, std::string source) {
  const std::size_t rk = rank(generator);
  if (rk != generator.rows()) throw RankDeficient(rk, generator.rows());
  Matrix parity = null_space(generator);
  return LinearCode(std::move(generator), std::move(parity), std::move(source));
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) {
  return from_generator(Matrix(std::move(field), 0, n), "zero");
}

std::optional<std::int64_t> LinearCode::designed_distance() const {
  if (!origin_) return std::nullopt;
  return static_cast<std::int64_t>(length()) - std::max<std::int64_t>(origin_->r, 0);
}

std::string LinearCode::name() const {
  return fmt::format("[{},{}]_{}", length(), dimension(), field().size());
}

LinearCode build_onepoint_code(const Curve& curve, std::int64_t r, const EvalSet& eval_set) {
  auto points = eval_set.select(curve);
  if (points.empty()) throw CodeError("evaluation set is empty");
  MonomialBasis basis;
  basis.r = r;
  basis.verified = true;
  if (r >= 0) basis = verified_basis(curve, r, points);
  Matrix g = evaluation_matrix(curve, basis.monomials, points);
  Matrix h = null_space(g);
  LinearCode code(std::move(g), std::move(h),
                  fmt::format("{} r={} D={}", curve.spec().describe(), r, eval_set.describe()));
  code.points_ = std::move(points);
  code.origin_ = CodeOrigin{curve.spec(), r, std::move(basis)};
  return code;
}

LinearCode dual(const LinearCode& code) {
  return LinearCode::from_generator(code.parity_check(), "dual of " + code.source());
}

LinearCode hermitian_dual(const LinearCode& code) {
  // <v, c>_H = v . c^q, so the Hermitian dual is the Euclidean dual of C^q.
  return LinearCode::from_generator(null_space(code.generator().conjugate()),
                                    "hermitian dual of " + code.source());
}

// Distances

std::string to_string(DistanceResult::Method method) {
  switch (method) {
    case DistanceResult::Method::kExact:
      return "exact";
    case DistanceResult::Method::kBoundsOnly:
      return "bounds-only";
    case DistanceResult::Method::kEmpty:
      return "empty";
  }
  return "";
}

std::uint64_t codeword_count(const LinearCode& code) {
  const std::uint64_t q = code.field().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= q;
  }
  return total;
}

namespace {

// Enumerates the codewords whose first message symbol is assigned to a worker
// by depth-first accumulation of precomputed row multiples.
class WeightEnumerator {
 public:
  explicit WeightEnumerator(const LinearCode& code)
      : f_(code.field()), n_(code.length()), k_(code.dimension()), q_(f_.size()) {
    scaled_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      auto row = code.generator().row(i);
      scaled_[i].resize(std::size_t{q_} * n_);
      for (Symbol s = 0; s < q_; ++s) {
        for (std::size_t j = 0; j < n_; ++j) scaled_[i][s * n_ + j] = f_.mul(s, row[j]);
      }
    }
  }

  std::vector<std::uint64_t> run(unsigned worker, unsigned workers) const {
    std::vector<std::uint64_t> hist(n_ + 1, 0);
    if (k_ == 0) {
      if (worker == 0) hist[0] = 1;
      return hist;
    }
    std::vector<Symbol> partial((k_ + 1) * n_, 0);
    for (Symbol s = worker; s < q_; s += workers) {
      add_row(partial, 0, s);
      descend(partial, 1, hist);
    }
    return hist;
  }

 private:
  void add_row(std::vector<Symbol>& partial, std::size_t depth, Symbol s) const {
    const Symbol* src = partial.data() + depth * n_;
    Symbol* dst = partial.data() + (depth + 1) * n_;
    const Symbol* mult = scaled_[depth].data() + std::size_t{s} * n_;
    for (std::size_t j = 0; j < n_; ++j) dst[j] = f_.add(src[j], mult[j]);
  }

  void descend(std::vector<Symbol>& partial, std::size_t depth,
               std::vector<std::uint64_t>& hist) const {
    if (depth == k_) {
      const Symbol* word = partial.data() + k_ * n_;
      ++hist[hamming_weight(std::span<const Symbol>(word, n_))];
      return;
    }
    for (Symbol s = 0; s < q_; ++s) {
      add_row(partial, depth, s);
      descend(partial, depth + 1, hist);
    }
  }

  const Field& f_;
  std::size_t n_;
  std::size_t k_;
  Symbol q_;
  std::vector<std::vector<Symbol>> scaled_;
};

unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

}  // namespace

std::vector<std::uint64_t> weight_distribution(const LinearCode& code, std::uint64_t budget,
                                               unsigned threads) {
  const std::uint64_t total = codeword_count(code);
  if (total > budget) {
    throw BudgetExceeded(fmt::format("{} has {} codewords, budget is {}", code.name(),
                                     total == std::numeric_limits<std::uint64_t>::max()
                                         ? std::string("more than 2^64")
                                         : std::to_string(total),
                                     budget));
  }
  const WeightEnumerator enumerator(code);
  const unsigned workers =
      std::min<unsigned>(resolve_threads(threads), code.dimension() == 0 ? 1 : code.field().size());
  std::vector<std::vector<std::uint64_t>> partial(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) {
      pool.emplace_back([&, w] { partial[w] = enumerator.run(w, workers); });
    }
    partial[0] = enumerator.run(0, workers);
  }
  std::vector<std::uint64_t> hist(code.length() + 1, 0);
  for (const auto& h : partial) {
    for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += h[i];
  }
  return hist;
}

DistanceResult min_distance_bruteforce(const LinearCode& code, std::uint64_t budget,
                                       unsigned threads) {
  DistanceResult result;
  const std::uint64_t n = code.length(), k = code.dimension();
  if (k == 0) return result;
  result.upper = n - k + 1;
  if (codeword_count(code) > budget) {
    result.method = DistanceResult::Method::kBoundsOnly;
    const auto designed = code.designed_distance();
    result.lower = designed && *designed > 0 ? static_cast<std::uint64_t>(*designed) : 1;
    result.lower = std::min(result.lower, result.upper);
    return result;
  }
  const auto hist = weight_distribution(code, budget, threads);
  for (std::uint64_t w = 1; w <= n; ++w) {
    if (hist[w] != 0) {
      result.method = DistanceResult::Method::kExact;
      result.d = result.lower = result.upper = w;
      return result;
    }
  }
  throw CodeError("nonzero code without nonzero codewords");
}

// Inner products

Symbol hermitian_inner(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Symbol acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], f.frobenius_q(b[i])));
  return acc;
}

Felt hermitian_inner(std::span<const Felt> a, std::span<const Felt> b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  if (a.empty()) throw std::invalid_argument("empty vectors carry no field");
  Felt acc = a[0].field()->zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * frobenius_q(b[i]);
  return acc;
}

OrthogonalityCheck check_hermitian_self_orthogonal(const LinearCode& code) {
  const Field& f = code.field();
  const Matrix& g = code.generator();
  const std::array<Symbol, 2> scalars{1, f.primitive()};
  std::vector<Symbol> scaled(code.length());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (Symbol lambda : scalars) {
      auto row = g.row(i);
      std::transform(row.begin(), row.end(), scaled.begin(),
                     [&](Symbol v) { return f.mul(lambda, v); });
      for (std::size_t j = 0; j < g.rows(); ++j) {
        if (hermitian_inner(f, scaled, g.row(j)) != 0) {
          return {false, std::make_pair(i, j)};
        }
      }
    }
  }
  return {};
}

bool is_hermitian_self_orthogonal(const LinearCode& code) {
  return check_hermitian_self_orthogonal(code).holds;
}

bool is_euclidean_self_orthogonal(const LinearCode& code) {
  const Matrix& g = code.generator();
  return (g * g.transpose()).is_zero();
}

// Duality claim

DualityClaim check_duality_claim(const Curve& curve, std::int64_t r, const EvalSet& eval_set) {
  DualityClaim claim;
  claim.r = r;
  const auto& spec = curve.spec();
  if (spec.family != CurveFamily::kSuperelliptic) {
    claim.note = "dual index formula is stated for the superelliptic family only";
    return claim;
  }
  const std::int64_t q = spec.q, m = spec.m;
  if (((q - 1) * (m - 1)) % 2 != 0) {
    claim.note = "(q-1)(m-1)/2 is not an integer";
    return claim;
  }
  claim.r_claimed = q * q + (q - 1) * (m - 1) / 2 - r;
  if (claim.r_claimed < 0) {
    claim.note = "claimed dual index is negative";
    return claim;
  }
  claim.applicable = true;
  const LinearCode c = build_onepoint_code(curve, r, eval_set);
  const LinearCode claimed = build_onepoint_code(curve, claim.r_claimed, eval_set);
  claim.n = c.length();
  claim.k = c.dimension();
  claim.k_dual = c.length() - c.dimension();
  claim.k_claimed = claimed.dimension();
  const Matrix& dual_gen = c.parity_check();
  claim.claimed_in_dual = row_space_contains(dual_gen, claimed.generator());
  claim.dual_in_claimed = row_space_contains(claimed.generator(), dual_gen);
  claim.equal = claim.claimed_in_dual && claim.dual_in_claimed;
  claim.note = claim.equal ? "dual equals claimed code" : "dual differs from claimed code";
  return claim;
}

void to_json(nlohmann::json& j, const DualityClaim& c) {
  j = nlohmann::json{{"applicable", c.applicable},
                     {"note", c.note},
                     {"r", c.r},
                     {"r_claimed", c.r_claimed},
                     {"n", c.n},
                     {"k", c.k},
                     {"k_dual", c.k_dual},
                     {"k_claimed", c.k_claimed},
                     {"equal", c.equal},
                     {"claimed_in_dual", c.claimed_in_dual},
                     {"dual_in_claimed", c.dual_in_claimed}};
}

// Reports

CodeReport make_code_report(const Curve& curve, std::int64_t r, const ReportOptions& options) {
  const auto& spec = curve.spec();
  CodeReport rep;
  const LinearCode code = build_onepoint_code(curve, r, options.eval_set);
  rep.code = code.name();
  rep.curve = spec.describe();
  rep.r = r;
  rep.n = code.length();
  rep.k = code.dimension();
  rep.closed_form_length = std::uint64_t{spec.q} * spec.q;
  rep.basis = code.origin()->basis;
  rep.distance = min_distance_bruteforce(code, options.budget, options.threads);
  rep.d_designed = code.designed_distance();
  if (rep.distance.d) {
    rep.singleton_ok = *rep.distance.d <= rep.n - rep.k + 1;
    if (rep.d_designed && *rep.d_designed > 0) {
      rep.goppa_bound_ok = static_cast<std::int64_t>(*rep.distance.d) >= *rep.d_designed;
    }
  }
  rep.euclidean_self_orthogonal = is_euclidean_self_orthogonal(code);
  rep.hermitian_self_orthogonal = is_hermitian_self_orthogonal(code);
  if (options.weights && codeword_count(code) <= options.budget) {
    rep.weight_distribution = weight_distribution(code, options.budget, options.threads);
  }
  if (options.duality && spec.family == CurveFamily::kSuperelliptic && r >= 0) {
    rep.duality_claim = check_duality_claim(curve, r, options.eval_set);
  }
  const auto points = code.points();
  if (r >= 0) rep.dimension = dimension_report(curve, points, r, r).front();

  rep.orthogonality_range = r >= 0 && r <= static_cast<std::int64_t>(spec.q) - 1;
  rep.readings.push_back({r, code.dimension(), rep.hermitian_self_orthogonal});
  const std::int64_t scaled = r * static_cast<std::int64_t>(spec.q + 1);
  const LinearCode wide = build_onepoint_code(curve, scaled, options.eval_set);
  rep.readings.push_back({scaled, wide.dimension(), is_hermitian_self_orthogonal(wide)});
  return rep;
}

void to_json(nlohmann::json& j, const DistanceResult& d) {
  j = nlohmann::json{{"method", to_string(d.method)}, {"lower", d.lower}, {"upper", d.upper}};
  j["d"] = d.d ? nlohmann::json(*d.d) : nlohmann::json();
}

void to_json(nlohmann::json& j, const CodeReport& rep) {
  j = nlohmann::json{{"code", rep.code},
                     {"curve", rep.curve},
                     {"r", rep.r},
                     {"n", rep.n},
                     {"k", rep.k},
                     {"closed_form_length", rep.closed_form_length},
                     {"distance", rep.distance},
                     {"singleton_ok", rep.singleton_ok},
                     {"euclidean_self_orthogonal", rep.euclidean_self_orthogonal},
                     {"hermitian_self_orthogonal", rep.hermitian_self_orthogonal},
                     {"orthogonality_range", rep.orthogonality_range},
                     {"basis", rep.basis}};
  j["d_designed"] = rep.d_designed ? nlohmann::json(*rep.d_designed) : nlohmann::json();
  j["goppa_bound_ok"] = rep.goppa_bound_ok ? nlohmann::json(*rep.goppa_bound_ok) : nlohmann::json();
  j["weight_distribution"] =
      rep.weight_distribution ? nlohmann::json(*rep.weight_distribution) : nlohmann::json();
  j["duality_claim"] = rep.duality_claim ? nlohmann::json(*rep.duality_claim) : nlohmann::json();
  j["dimension"] = rep.dimension ? nlohmann::json(*rep.dimension) : nlohmann::json();
  auto& readings = j["hermitian_readings"] = nlohmann::json::array();
  for (const auto& rd : rep.readings) {
    readings.push_back({{"pole_multiple", rd.pole_multiple},
                        {"k", rd.k},
                        {"hermitian_self_orthogonal", rd.hermitian_self_orthogonal}});
  }
}

}  // namespace agq
