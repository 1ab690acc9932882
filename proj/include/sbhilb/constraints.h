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

// Numerical constraints on subschemes of a Severi-Brauer variety X = SB(A)
// attached to a central simple algebra A of degree d, index n, exponent m.
// Throughout d > 2, so X is not a curve.

#ifndef SBHILB_CONSTRAINTS_H_
#define SBHILB_CONSTRAINTS_H_

#include <cstdint>

#include "sbhilb/errors.h"

namespace sbhilb {

// (degree, index, exponent) of a central simple algebra. Construct through
// make(), which enforces n | d, m | n, d > 2 and (division => n == d).
class AlgebraInvariants {
 public:
  static AlgebraInvariants make(std::int64_t degree, std::int64_t index,
                                std::int64_t exponent, bool is_division);
  // Division algebra of the given index: d = n.
  static AlgebraInvariants division(std::int64_t index, std::int64_t exponent);

  std::int64_t degree() const { return d_; }
  std::int64_t index() const { return n_; }
  std::int64_t exponent() const { return m_; }
  bool is_division() const { return is_division_; }

  friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;

 private:
  AlgebraInvariants(std::int64_t d, std::int64_t n, std::int64_t m, bool division)
      : d_(d), n_(n), m_(m), is_division_(division) {}

  std::int64_t d_;
  std::int64_t n_;
  std::int64_t m_;
  bool is_division_;
};

struct CastelnuovoBound {
  std::int64_t q = 0;
  std::int64_t rem = 0;
  std::int64_t g_max = 0;
  friend bool operator==(const CastelnuovoBound&, const CastelnuovoBound&) = default;
};

// n for odd n, n/2 for even n: the smallest degree a curve on X can have.
std::int64_t min_curve_degree(std::int64_t n);

// v_p(deg) >= v_p(n) for odd p and v_2(deg) >= v_2(n) - 1.
bool degree_admissible(std::int64_t deg, std::int64_t n);

// n | chi for odd n, (n/2) | chi for even n.
bool euler_admissible(std::int64_t chi, std::int64_t n);

// Closed points of X for a division algebra of index n have degree divisible
// by n. The caller is responsible for the division hypothesis.
bool point_degree_admissible(std::int64_t deg, std::int64_t n);

// Castelnuovo's bound for a nondegenerate integral curve of degree p in
// P^{d-1}: write p-1 = q(d-2) + rem, then g <= (d-2)q(q-1)/2 + q*rem.
CastelnuovoBound castelnuovo(std::int64_t p, std::int64_t d);

// chi(N_{C/P^{d-1}}) for a smooth curve of degree deg and genus g, from the
// Euler sequence restricted to C and the normal bundle sequence:
//   deg N = d*deg + 2g - 2,  rank N = d - 2.
std::int64_t normal_bundle_euler(std::int64_t d, std::int64_t deg, std::int64_t g);

}  // namespace sbhilb

#endif  // SBHILB_CONSTRAINTS_H_
