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

// Line configurations as incidence graphs: vertices are the points where
// lines meet (or end), edges are the lines. A configuration carries a
// permutation group, given by generators acting on vertices, standing in for
// the Galois action; the edge set is always stable under it.

#ifndef SBHILB_LINECONFIG_H_
#define SBHILB_LINECONFIG_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sbhilb {

// Image list: perm[i] is the image of i.
using Permutation = std::vector<int>;

// A line through two distinct vertices, stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  static Edge between(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Permutation identity_permutation(int n);
// (lhs * rhs)(i) = lhs[rhs[i]].
Permutation compose(const Permutation& lhs, const Permutation& rhs);
Permutation inverse(const Permutation& perm);
bool is_permutation(const Permutation& perm);
// Builds an image list on n points from disjoint cycles.
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

// Breadth-first orbit of `start` under the group generated by `generators`.
// The result is sorted.
std::vector<int> orbit(int start, std::span<const Permutation> generators);

class LineConfig {
 public:
  // Throws InvariantError when an edge is a loop or repeated, a vertex lies
  // on no edge, there are no edges, a generator is not a permutation of the
  // vertex set, or a generator does not map the edge set onto itself.
  static LineConfig make(int num_vertices, std::vector<Edge> edges,
                         std::vector<Permutation> generators,
                         std::vector<std::string> labels = {});

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Permutation> generators() const { return generators_; }
  // Vertex names; defaults to "0", "1", ...
  std::span<const std::string> labels() const { return labels_; }

  // Number of lines through each vertex.
  std::vector<int> branches() const;
  std::optional<int> edge_index(Edge edge) const;
  // The generators transported to permutations of edge indices.
  std::vector<Permutation> edge_generators() const;

 private:
  LineConfig() = default;

  int num_vertices_ = 0;
  std::vector<Edge> edges_;  // sorted
  std::vector<Permutation> generators_;
  std::vector<std::string> labels_;
};

struct ConfigReport {
  std::int64_t degree = 0;
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  bool edge_transitive = false;
  bool vertex_single_orbit = false;
  friend bool operator==(const ConfigReport&, const ConfigReport&) = default;
};

// Cycle of p lines through p points, rotated by a p-cycle.
LineConfig ngon(int p);
// The r-cube with lines for edges; vertices are bit masks, the generators
// flip one coordinate each.
LineConfig cube(int r);
// K_n with S_n acting through a transposition and an n-cycle.
LineConfig complete(int n);
// Two disjoint lines through the four points of a (Z/2)^2-torsor: vertex
// 2i+j, labelled "ij", stands for the group element (i, j); L1 = {(0,0),(0,1)},
// L2 = {(1,0),(1,1)}. Translation by (1,0) swaps the lines, translation by
// (0,1) swaps the endpoints of each.
LineConfig disjoint_lines();

// Degree, connected components and arithmetic genus by cycle rank, plus
// transitivity of the group on lines and on points.
ConfigReport report(const LineConfig& config);

// True when the configuration is a p-gon for an odd prime p: connected,
// p vertices and p edges, every vertex on exactly two lines, and the group
// transitive on lines.
bool is_pgon(const LineConfig& config, int p);

// The edge set is a union of orbits (always true for a valid LineConfig);
// with single_orbit set, the lines must also form one orbit.
bool descends(const LineConfig& config, bool single_orbit);

bool is_prime(std::int64_t n);

}  // namespace sbhilb

#endif  // SBHILB_LINECONFIG_H_
