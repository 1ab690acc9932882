// Copyright 2026 The sbhilb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sbhilb/rational_matrix.h"

#include <cctype>
#include <utility>

#include "sbhilb/errors.h"

namespace sbhilb {
namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_int(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("missing digits in fraction '" + std::string(whole) + "'");
  cpp_int value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      if (c == '.' || c == 'e' || c == 'E') {
        throw ParseError("'" + std::string(whole) +
                         "' is not an exact fraction; write it as p/q");
      }
      throw ParseError("unexpected character '" + std::string(1, c) + "' in fraction '" +
                       std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const std::size_t slash = body.find('/');
  cpp_int num = parse_int(body.substr(0, slash), text);
  cpp_int den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(body.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational value(num, den);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

RationalMatrix RationalMatrix::from_rows(std::span<const std::vector<Rational>> rows,
                                         std::size_t cols) {
  RationalMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvariantError("ragged rows in rational matrix");
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = rows[i][j];
  }
  return out;
}

std::size_t rank(RationalMatrix matrix) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < matrix.cols() && pivot_row < matrix.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < matrix.rows() && matrix.at(found, col) == 0) ++found;
    if (found == matrix.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t j = col; j < matrix.cols(); ++j) {
        std::swap(matrix.at(found, j), matrix.at(pivot_row, j));
      }
    }
    const Rational pivot = matrix.at(pivot_row, col);
    for (std::size_t i = pivot_row + 1; i < matrix.rows(); ++i) {
      if (matrix.at(i, col) == 0) continue;
      const Rational factor = matrix.at(i, col) / pivot;
      for (std::size_t j = col; j < matrix.cols(); ++j) {
        matrix.at(i, j) -= factor * matrix.at(pivot_row, j);
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t rank_of(std::span<const std::vector<Rational>> vectors, std::size_t dim) {
  return rank(RationalMatrix::from_rows(vectors, dim));
}

}  // namespace sbhilb
