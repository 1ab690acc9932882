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

// Cohomology of O(m) on a union of lines in P^{d-1} with explicit rational
// coordinates. For a union of lines meeting transversally with independent
// branch directions, O_C(m) sits in the exact sequence
//
//   0 -> O_C(m) -> (+)_lines O_L(m) -> (+)_points k^(branches - 1) -> 0
//
// and H^1(O_L(m)) = 0 for m >= -1, so h^0 and h^1 are the kernel and
// cokernel of the agreement map on global sections.

#ifndef SBHILB_COHOMOLOGY_H_
#define SBHILB_COHOMOLOGY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sbhilb/lineconfig.h"
#include "sbhilb/rational_matrix.h"

namespace sbhilb {

class EmbeddedConfig {
 public:
  // Validates that every coordinate vector is nonzero of length d, no two
  // vertices are proportional, each line has independent endpoints, and the
  // lines form a transversal union: branch directions at a vertex are
  // independent, no vertex lies on a line it is not an endpoint of, and lines
  // without a common vertex are disjoint. Throws InvariantError otherwise.
  static EmbeddedConfig make(LineConfig base, int ambient_dim,
                             std::vector<std::vector<Rational>> coords);

  const LineConfig& base() const { return base_; }
  // Length of the coordinate vectors; the ambient space is P^{d-1}.
  int ambient_dim() const { return ambient_dim_; }
  std::span<const std::vector<Rational>> coords() const { return coords_; }
  // Rank of the vertex coordinate matrix equals ambient_dim.
  bool spans() const;

 private:
  EmbeddedConfig(LineConfig base, int ambient_dim, std::vector<std::vector<Rational>> coords)
      : base_(std::move(base)), ambient_dim_(ambient_dim), coords_(std::move(coords)) {}

  LineConfig base_;
  int ambient_dim_;
  std::vector<std::vector<Rational>> coords_;
};

struct CohomReport {
  std::int64_t m = 0;
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t chi = 0;
  bool spans = false;
  friend bool operator==(const CohomReport&, const CohomReport&) = default;
};

// The i-th vertex goes to the i-th standard basis vector of Q^d. Requires
// |vertices| <= d.
EmbeddedConfig standard_embedding(const LineConfig& config, int d);

// h^0 and h^1 of O(m), m >= 0, by exact elimination over Q.
CohomReport twist_cohomology(const EmbeddedConfig& cfg, std::int64_t m);

struct SmoothingHypotheses {
  bool h1_O_equals_1 = false;
  bool h1_O1_vanishes = false;
  bool nodal = false;
  friend bool operator==(const SmoothingHypotheses&, const SmoothingHypotheses&) = default;
};

// h^1(O) = 1, h^1(O(1)) = 0 and every vertex on exactly two lines. These are
// the numerical inputs to the smoothing argument, not a smoothability proof.
SmoothingHypotheses smoothing_hypotheses(const EmbeddedConfig& cfg);

}  // namespace sbhilb

#endif  // SBHILB_COHOMOLOGY_H_
