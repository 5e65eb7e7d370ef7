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
#include <vector>

#include <nlohmann/json.hpp>

#include "agq/gf.hpp"

namespace agq {

class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CurveFamily {
  kSuperelliptic,  // y^n = x^m + x with n = (q+1)/2
  kHermitian,      // y^q + y = x^(q+1)
};

std::string to_string(CurveFamily family);
CurveFamily parse_family(const std::string& name);

/// Which of the family's standing coprimality hypotheses hold. They are
/// reported, not enforced.
struct CurveHypotheses {
  bool gcd_n_m = true;
  bool gcd_q_n = true;
  bool gcd_q_m_minus_1 = true;
  bool all() const { return gcd_n_m && gcd_q_n && gcd_q_m_minus_1; }
};

struct CurveSpec {
  CurveFamily family = CurveFamily::kSuperelliptic;
  std::uint32_t q = 0;  // the curve lives over GF(q^2)
  std::uint32_t n = 0;  // exponent of y
  std::uint32_t m = 0;  // exponent of x
  std::uint32_t pole_order_x = 0;
  std::uint32_t pole_order_y = 0;

  /// y^((q+1)/2) = x^m + x. Rejects even or non-prime-power q, m < 2 and
  /// parameter pairs whose genus (m-1)(n-1)/2 is not an integer.
  static CurveSpec superelliptic(std::uint32_t q, std::uint32_t m);
  /// y^q + y = x^(q+1).
  static CurveSpec hermitian(std::uint32_t q);

  CurveHypotheses hypotheses() const;
  std::uint32_t genus() const;
  std::string describe() const;
};

/// {family, q, m}
void to_json(nlohmann::json& j, const CurveSpec& spec);
void from_json(const nlohmann::json& j, CurveSpec& spec);

struct CurvePoint {
  enum class Kind { kAffine, kInfinity };
  Kind kind = Kind::kAffine;
  Felt x;
  Felt y;

  static CurvePoint infinity() { return {Kind::kInfinity, {}, {}}; }
  bool is_infinity() const { return kind == Kind::kInfinity; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct MaximalityReport {
  std::uint64_t count_points = 0;  // including the point at infinity
  std::uint64_t expected = 0;      // q^2 + 1 + 2 g q
  bool is_maximal = false;
};

/// A curve together with its field tower GF(q) < GF(q^2).
class Curve {
 public:
  explicit Curve(CurveSpec spec);

  const CurveSpec& spec() const { return spec_; }
  const FieldTower& tower() const { return tower_; }
  const Field& field() const { return *tower_.ext(); }
  const FieldPtr& field_ptr() const { return tower_.ext(); }

  bool is_on_curve(const CurvePoint& pt) const;
  bool is_on_curve(Symbol x, Symbol y) const;

  /// Affine GF(q^2)-rational points in (x, y) canonical order, then the
  /// single point at infinity.
  std::vector<CurvePoint> enumerate_points() const;
  /// Same as enumerate_points() without the point at infinity.
  std::vector<CurvePoint> affine_points() const;

  std::uint32_t genus() const { return spec_.genus(); }
  MaximalityReport maximality_check() const;

 private:
  Symbol lhs(Symbol y) const;
  Symbol rhs(Symbol x) const;

  CurveSpec spec_;
  FieldTower tower_;
};

/// CSV with header "index,x,y"; coordinates as space-separated
/// coefficients, lowest degree first. The point at infinity is written as
/// "inf,inf".
void write_points_csv(std::ostream& out, const Curve& curve,
                      const std::vector<CurvePoint>& points);

}  // namespace agq
