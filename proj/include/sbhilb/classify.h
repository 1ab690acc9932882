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

// Enumeration of the numerical shapes a subscheme V of a Severi-Brauer
// variety can take when its reduced Hilbert polynomial is f(n)t + s, the
// minimal curve degree for a division algebra of index n. V is a unique
// curve C of degree f(n) together with a (possibly empty) set of closed
// points; every profile records h^0 and h^1 of C, flags describing C over an
// algebraic closure, and the degrees of the residual points.

#ifndef SBHILB_CLASSIFY_H_
#define SBHILB_CLASSIFY_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "sbhilb/constraints.h"
#include "sbhilb/numpoly.h"

namespace sbhilb {

enum class Narrative {
  kSmoothGenusOne,     // smooth genus-one curve, V = C
  kSingularIntegral,   // geometrically integral, singular
  kPGonOfLines,        // geometrically a p-gon of lines, V = C
  kNonReducedCurve,    // generically reduced, with embedded structure
  kWithResidualPoint,  // smooth genus-one curve plus closed points
  kReducibleCurve,     // geometrically reducible and reduced, outside the p-gon regime
};

std::string_view to_string(Narrative tag);

// How firmly the case analysis backs a profile.
enum class Standing {
  kClassified,    // forced by the case analysis for odd prime index, s = 0
  kExtrapolated,  // the index-5 nonreduced argument replayed for another prime
  kCandidate,     // survives every numerical constraint; existence not decided
};

std::string_view to_string(Standing standing);

struct SubschemeProfile {
  std::int64_t curve_degree = 0;
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  bool geom_connected = false;
  bool geom_reduced = false;
  bool geom_irreducible = false;
  // Sorted in decreasing order.
  std::vector<std::int64_t> extra_point_degrees;
  Narrative narrative = Narrative::kSmoothGenusOne;
  Standing standing = Standing::kCandidate;

  // chi(O_V) = h0 - h1 + sum of residual point degrees.
  std::int64_t euler_characteristic() const;

  friend bool operator==(const SubschemeProfile&, const SubschemeProfile&) = default;
};

// Every profile allowed by the constraints for a division algebra with
// poly.r = f(n) and a nonempty Hilbert scheme. Throws PreconditionError
// naming the failed hypothesis otherwise. An empty result means the
// constraints are jointly unsatisfiable. Output is sorted by narrative, then
// h0, then h1, then residual points.
std::vector<SubschemeProfile> enumerate_profiles(const AlgebraInvariants& alg,
                                                 const NumPoly& poly);

// True when the enumeration is a full classification (odd prime index and
// s = 0); otherwise the profiles are constraint-filtered candidates.
bool is_settled_regime(const AlgebraInvariants& alg, const NumPoly& poly);

// The geometrically reducible profile for odd prime index p: a p-gon of
// lines with h0 = h1 = 1 and V = C. Throws DomainError unless p is an odd
// prime.
SubschemeProfile reducible_case(std::int64_t p);

}  // namespace sbhilb

#endif  // SBHILB_CLASSIFY_H_
