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

#ifndef SBHILB_NUMPOLY_H_
#define SBHILB_NUMPOLY_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "sbhilb/errors.h"

namespace sbhilb {

// The linear numerical polynomial r*t + s.
struct NumPoly {
  std::int64_t r = 0;
  std::int64_t s = 0;

  std::int64_t operator()(std::int64_t t) const { return r * t + s; }
  friend bool operator==(const NumPoly&, const NumPoly&) = default;
};

// Binomial-basis coefficients with
//   r*t + s = C(t,1) - C(t-m0,1) + C(t+1,2) - C(t+1-m1,2)
//           = m0 + m1*t + (m1 - m1^2)/2.
struct BinomialDecomposition {
  std::int64_t m0 = 0;
  std::int64_t m1 = 0;

  // Value of the binomial sum at t; exact because m1 - m1^2 is even.
  std::int64_t evaluate(std::int64_t t) const {
    return m0 + m1 * t + (m1 - m1 * m1) / 2;
  }
  friend bool operator==(const BinomialDecomposition&,
                         const BinomialDecomposition&) = default;
};

// Largest |r| accepted, so that r^2 stays inside 64-bit arithmetic.
inline constexpr std::int64_t kMaxCoefficient = std::int64_t{1} << 30;

BinomialDecomposition decompose(const NumPoly& poly);

// The Hilbert scheme of P^N (N >= 2) with polynomial rt+s is nonempty iff
// m0 >= m1 >= 0.
bool hilb_nonempty(const NumPoly& poly);

// (r^2 - 3r)/2 + h0, the largest h^1 a subscheme of dimension <= 1 with
// polynomial rt+s and the given h^0 can have.
std::int64_t h1_upper_bound(std::int64_t r, std::int64_t h0);

// Accepts "r,s" coefficient lists (highest degree first) and expressions such
// as "5t", "5t+1", "-t - 2", "7". Anything of degree >= 2 is rejected.
NumPoly parse_numpoly(std::string_view text);

std::string to_string(const NumPoly& poly);

}  // namespace sbhilb

#endif  // SBHILB_NUMPOLY_H_
