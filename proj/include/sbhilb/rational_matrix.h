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

#ifndef SBHILB_RATIONAL_MATRIX_H_
#define SBHILB_RATIONAL_MATRIX_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sbhilb {

using Rational = boost::multiprecision::cpp_rational;

// Reads "p/q" or "p" with optional sign. Decimal points, exponents and zero
// denominators are rejected with ParseError.
Rational parse_rational(std::string_view text);
// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  // Matrix whose rows are the given vectors; all must have equal length.
  static RationalMatrix from_rows(std::span<const std::vector<Rational>> rows,
                                  std::size_t cols);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

// Rank by Gaussian elimination over Q, pivoting on the first nonzero entry
// of each column.
std::size_t rank(RationalMatrix matrix);

// Rank of a set of vectors of common length `dim`.
std::size_t rank_of(std::span<const std::vector<Rational>> vectors, std::size_t dim);

}  // namespace sbhilb

#endif  // SBHILB_RATIONAL_MATRIX_H_
