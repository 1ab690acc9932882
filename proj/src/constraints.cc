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

#include "sbhilb/constraints.h"

#include <string>

#include "sbhilb/numpoly.h"

namespace sbhilb {
namespace {

void require_positive(std::int64_t value, const char* name) {
  if (value < 1) {
    throw DomainError(std::string(name) + " must be positive, got " + std::to_string(value));
  }
}

// The modulus that every curve degree and every Euler characteristic must be
// a multiple of: n for odd n, n/2 for even n.
std::int64_t divisibility_modulus(std::int64_t n) { return n % 2 == 1 ? n : n / 2; }

}  // namespace

AlgebraInvariants AlgebraInvariants::make(std::int64_t degree, std::int64_t index,
                                          std::int64_t exponent, bool is_division) {
  const std::string triple = "(d, n, m) = (" + std::to_string(degree) + ", " +
                             std::to_string(index) + ", " + std::to_string(exponent) + ")";
  if (degree < 1 || index < 1 || exponent < 1) {
    throw InvariantError(triple + ": degree, index and exponent must be positive");
  }
  if (degree <= 2) {
    throw InvariantError(triple + ": degree must exceed 2 so that X is not a curve");
  }
  if (degree % index != 0) throw InvariantError(triple + ": index must divide degree");
  if (index % exponent != 0) throw InvariantError(triple + ": exponent must divide index");
  if (is_division && index != degree) {
    throw InvariantError(triple + ": a division algebra has index equal to its degree");
  }
  return AlgebraInvariants(degree, index, exponent, is_division);
}

AlgebraInvariants AlgebraInvariants::division(std::int64_t index, std::int64_t exponent) {
  return make(index, index, exponent, true);
}

std::int64_t min_curve_degree(std::int64_t n) {
  require_positive(n, "index");
  return divisibility_modulus(n);
}

bool degree_admissible(std::int64_t deg, std::int64_t n) {
  require_positive(deg, "degree");
  require_positive(n, "index");
  return deg % divisibility_modulus(n) == 0;
}

bool euler_admissible(std::int64_t chi, std::int64_t n) {
  require_positive(n, "index");
  return chi % divisibility_modulus(n) == 0;
}

bool point_degree_admissible(std::int64_t deg, std::int64_t n) {
  require_positive(deg, "point degree");
  require_positive(n, "index");
  return deg % n == 0;
}

CastelnuovoBound castelnuovo(std::int64_t p, std::int64_t d) {
  require_positive(p, "curve degree");
  if (d < 3) throw DomainError("castelnuovo needs d >= 3, got d = " + std::to_string(d));
  CastelnuovoBound bound;
  bound.q = (p - 1) / (d - 2);
  bound.rem = (p - 1) % (d - 2);
  bound.g_max = (d - 2) * bound.q * (bound.q - 1) / 2 + bound.q * bound.rem;
  return bound;
}

std::int64_t normal_bundle_euler(std::int64_t d, std::int64_t deg, std::int64_t g) {
  if (d < 3) throw DomainError("normal_bundle_euler needs d >= 3, got d = " + std::to_string(d));
  require_positive(deg, "curve degree");
  if (g < 0) throw DomainError("genus must be nonnegative, got " + std::to_string(g));
  return d * deg + (2 * g - 2) + (d - 2) * (1 - g);
}

}  // namespace sbhilb
