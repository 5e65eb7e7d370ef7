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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "agq/agcode.hpp"

namespace agq {

namespace {

std::uint64_t header_value(const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw CodeError(fmt::format("matrix header: expected '{}<value>', got '{}'", prefix, token));
  }
  try {
    std::size_t used = 0;
    const auto v = std::stoull(token.substr(prefix.size()), &used);
    if (used != token.size() - prefix.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw CodeError(fmt::format("matrix header: bad value in '{}'", token));
  }
}

}  // namespace

Matrix read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CodeError("matrix file is empty");
  std::istringstream header(line);
  std::string t_q, t_n, t_k, extra;
  if (!(header >> t_q >> t_n >> t_k) || (header >> extra)) {
    throw CodeError("matrix header must be 'q2=<size> n=<n> k=<k>'");
  }
  const auto order = header_value(t_q, "q2");
  const auto n = header_value(t_n, "n");
  const auto k = header_value(t_k, "k");
  if (order > kMaxFieldOrder) throw CodeError("field order out of range");
  FieldPtr field;
  try {
    field = Field::of_order(static_cast<std::uint32_t>(order));
  } catch (const FieldError& e) {
    throw CodeError(fmt::format("matrix header: {}", e.what()));
  }

  Matrix m(field, 0, n);
  std::vector<Symbol> row(n);
  std::size_t line_no = 1;
  while (m.rows() < k) {
    if (!std::getline(in, line)) {
      throw CodeError(fmt::format("expected {} rows, found {}", k, m.rows()));
    }
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    for (std::size_t j = 0; j < n; ++j) {
      long long v = -1;
      if (!(ls >> v) || v < 0 || static_cast<std::uint64_t>(v) >= order) {
        throw CodeError(fmt::format("line {}: entry {} is missing or not a field index", line_no, j + 1));
      }
      row[j] = static_cast<Symbol>(v);
    }
    std::string rest;
    if (ls >> rest) throw CodeError(fmt::format("line {}: more than {} entries", line_no, n));
    m.append_row(row);
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw CodeError(fmt::format("more than {} rows", k));
    }
  }
  return m;
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << "q2=" << m.field()->size() << " n=" << m.cols() << " k=" << m.rows() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
    out << '\n';
  }
}

LinearCode load_explicit_code(std::istream& in, const std::string& source) {
  return LinearCode::from_generator(read_matrix(in), source);
}

LinearCode load_explicit_code(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CodeError(fmt::format("cannot open {}", path.string()));
  return load_explicit_code(in, path.filename().string());
}

}  // namespace agq
