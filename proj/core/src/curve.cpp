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

#include "agq/curve.hpp"

#include <numeric>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace agq {

std::string to_string(CurveFamily family) {
  return family == CurveFamily::kHermitian ? "hermitian" : "superelliptic";
}

CurveFamily parse_family(const std::string& name) {
  if (name == "hermitian") return CurveFamily::kHermitian;
  if (name == "superelliptic") return CurveFamily::kSuperelliptic;
  throw CurveError(fmt::format("unknown curve family '{}'", name));
}

CurveSpec CurveSpec::superelliptic(std::uint32_t q, std::uint32_t m) {
  const auto [p, s] = prime_power(q);
  if (p == 0) throw CurveError(fmt::format("q = {} is not a prime power", q));
  if (q % 2 == 0) throw CurveError(fmt::format("q = {} must be odd so that (q+1)/2 is integral", q));
  if (m < 2) throw CurveError("m must be at least 2");
  const std::uint32_t n = (q + 1) / 2;
  if (((m - 1) * (n - 1)) % 2 != 0) {
    throw CurveError(fmt::format(
        "genus (m-1)(n-1)/2 is not an integer for q = {}, m = {}", q, m));
  }
  return CurveSpec{CurveFamily::kSuperelliptic, q, n, m, n, m};
}

CurveSpec CurveSpec::hermitian(std::uint32_t q) {
  const auto [p, s] = prime_power(q);
  if (p == 0) throw CurveError(fmt::format("q = {} is not a prime power", q));
  return CurveSpec{CurveFamily::kHermitian, q, q, q + 1, q, q + 1};
}

CurveHypotheses CurveSpec::hypotheses() const {
  if (family == CurveFamily::kHermitian) return {};
  return {std::gcd(n, m) == 1, std::gcd(q, n) == 1, std::gcd(q, m - 1) == 1};
}

std::uint32_t CurveSpec::genus() const {
  if (family == CurveFamily::kHermitian) return q * (q - 1) / 2;
  return (m - 1) * (n - 1) / 2;
}

std::string CurveSpec::describe() const {
  if (family == CurveFamily::kHermitian) {
    return fmt::format("y^{0}+y=x^{1} over GF({2})", q, q + 1, q * q);
  }
  return fmt::format("y^{}=x^{}+x over GF({})", n, m, q * q);
}

void to_json(nlohmann::json& j, const CurveSpec& spec) {
  j = nlohmann::json{{"family", to_string(spec.family)}, {"q", spec.q}};
  if (spec.family == CurveFamily::kSuperelliptic) j["m"] = spec.m;
}

void from_json(const nlohmann::json& j, CurveSpec& spec) {
  const auto family = parse_family(j.at("family").get<std::string>());
  const auto q = j.at("q").get<std::uint32_t>();
  spec = family == CurveFamily::kHermitian
             ? CurveSpec::hermitian(q)
             : CurveSpec::superelliptic(q, j.at("m").get<std::uint32_t>());
}

namespace {

FieldTower make_tower(std::uint32_t q) {
  const auto [p, s] = prime_power(q);
  return FieldTower::quadratic(p, s);
}

}  // namespace

Curve::Curve(CurveSpec spec) : spec_(spec), tower_(make_tower(spec.q)) {}

Symbol Curve::lhs(Symbol y) const {
  const Field& f = field();
  if (spec_.family == CurveFamily::kHermitian) return f.add(f.pow(y, spec_.q), y);
  return f.pow(y, spec_.n);
}

Symbol Curve::rhs(Symbol x) const {
  const Field& f = field();
  if (spec_.family == CurveFamily::kHermitian) return f.pow(x, spec_.q + 1);
  return f.add(f.pow(x, spec_.m), x);
}

bool Curve::is_on_curve(Symbol x, Symbol y) const { return lhs(y) == rhs(x); }

bool Curve::is_on_curve(const CurvePoint& pt) const {
  if (pt.is_infinity()) return true;
  if (pt.x.field() != &field() || pt.y.field() != &field()) {
    throw FieldMismatch("point coordinates are not in the curve's field");
  }
  return is_on_curve(pt.x.index(), pt.y.index());
}

std::vector<CurvePoint> Curve::affine_points() const {
  const Field& f = field();
  // Bucket y by lhs(y); buckets stay in canonical y order.
  std::vector<std::vector<Symbol>> fibers(f.size());
  for (Symbol y = 0; y < f.size(); ++y) fibers[lhs(y)].push_back(y);

  std::vector<CurvePoint> out;
  for (Symbol x = 0; x < f.size(); ++x) {
    for (Symbol y : fibers[rhs(x)]) {
      out.push_back({CurvePoint::Kind::kAffine, Felt(&f, x), Felt(&f, y)});
    }
  }
  return out;
}

std::vector<CurvePoint> Curve::enumerate_points() const {
  auto pts = affine_points();
  pts.push_back(CurvePoint::infinity());
  return pts;
}

MaximalityReport Curve::maximality_check() const {
  MaximalityReport report;
  report.count_points = enumerate_points().size();
  const std::uint64_t q = spec_.q;
  report.expected = q * q + 1 + 2 * std::uint64_t{genus()} * q;
  report.is_maximal = report.count_points == report.expected;
  return report;
}

void write_points_csv(std::ostream& out, const Curve& curve,
                      const std::vector<CurvePoint>& points) {
  auto coeff_str = [&](const Felt& a) {
    return fmt::format("{}", fmt::join(curve.field().coeffs(a.index()), " "));
  };
  out << "index,x,y\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_infinity()) {
      out << i << ",inf,inf\n";
    } else {
      out << i << ',' << coeff_str(points[i].x) << ',' << coeff_str(points[i].y) << '\n';
    }
  }
}

}  // namespace agq
