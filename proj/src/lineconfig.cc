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

#include "sbhilb/lineconfig.h"

#include <algorithm>
#include <deque>
#include <string>

#include "sbhilb/errors.h"

namespace sbhilb {

Permutation identity_permutation(int n) {
  Permutation perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return perm;
}

Permutation compose(const Permutation& lhs, const Permutation& rhs) {
  Permutation out(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) out[i] = lhs[rhs[i]];
  return out;
}

Permutation inverse(const Permutation& perm) {
  Permutation out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = static_cast<int>(i);
  return out;
}

bool is_permutation(const Permutation& perm) {
  std::vector<bool> hit(perm.size(), false);
  for (int image : perm) {
    if (image < 0 || image >= static_cast<int>(perm.size()) || hit[image]) return false;
    hit[image] = true;
  }
  return true;
}

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation perm = identity_permutation(n);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      if (from < 0 || from >= n) {
        throw InvariantError("cycle entry " + std::to_string(from) + " is not a vertex");
      }
      if (used[from]) {
        throw InvariantError("vertex " + std::to_string(from) +
                             " appears twice in one generator's cycles");
      }
      used[from] = true;
      perm[from] = cycle[(k + 1) % cycle.size()];
    }
  }
  return perm;
}

std::vector<int> orbit(int start, std::span<const Permutation> generators) {
  std::vector<int> seen{start};
  if (generators.empty()) return seen;
  std::vector<bool> visited(generators.front().size(), false);
  visited[start] = true;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int current = queue.front();
    queue.pop_front();
    for (const Permutation& gen : generators) {
      const int next = gen[current];
      if (!visited[next]) {
        visited[next] = true;
        seen.push_back(next);
        queue.push_back(next);
      }
    }
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

LineConfig LineConfig::make(int num_vertices, std::vector<Edge> edges,
                            std::vector<Permutation> generators,
                            std::vector<std::string> labels) {
  if (num_vertices < 1) throw InvariantError("a configuration needs at least one vertex");
  if (edges.empty()) throw InvariantError("a configuration needs at least one line");
  if (labels.empty()) {
    for (int v = 0; v < num_vertices; ++v) labels.push_back(std::to_string(v));
  } else if (static_cast<int>(labels.size()) != num_vertices) {
    throw InvariantError("label count does not match vertex count");
  }

  std::vector<int> incidence(num_vertices, 0);
  for (Edge& edge : edges) {
    if (edge.a < 0 || edge.b < 0 || edge.a >= num_vertices || edge.b >= num_vertices) {
      throw InvariantError("edge endpoint out of range");
    }
    if (edge.a == edge.b) {
      throw InvariantError("line through vertex " + labels[edge.a] +
                           " has coincident endpoints");
    }
    edge = Edge::between(edge.a, edge.b);
    ++incidence[edge.a];
    ++incidence[edge.b];
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvariantError("line " + labels[dup->a] + " " + labels[dup->b] +
                         " is listed twice");
  }
  for (int v = 0; v < num_vertices; ++v) {
    if (incidence[v] == 0) {
      throw InvariantError("vertex " + labels[v] + " lies on no line");
    }
  }

  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Permutation& gen = generators[g];
    if (static_cast<int>(gen.size()) != num_vertices || !is_permutation(gen)) {
      throw InvariantError("generator " + std::to_string(g) +
                           " is not a permutation of the vertices");
    }
    for (const Edge& edge : edges) {
      const Edge image = Edge::between(gen[edge.a], gen[edge.b]);
      if (!std::binary_search(edges.begin(), edges.end(), image)) {
        throw InvariantError("generator " + std::to_string(g) + " maps line " +
                             labels[edge.a] + " " + labels[edge.b] +
                             " outside the configuration");
      }
    }
  }

  LineConfig config;
  config.num_vertices_ = num_vertices;
  config.edges_ = std::move(edges);
  config.generators_ = std::move(generators);
  config.labels_ = std::move(labels);
  return config;
}

std::vector<int> LineConfig::branches() const {
  std::vector<int> count(num_vertices_, 0);
  for (const Edge& edge : edges_) {
    ++count[edge.a];
    ++count[edge.b];
  }
  return count;
}

std::optional<int> LineConfig::edge_index(Edge edge) const {
  edge = Edge::between(edge.a, edge.b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), edge);
  if (it == edges_.end() || *it != edge) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::vector<Permutation> LineConfig::edge_generators() const {
  std::vector<Permutation> out;
  out.reserve(generators_.size());
  for (const Permutation& gen : generators_) {
    Permutation on_edges(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      on_edges[e] = *edge_index(Edge{gen[edges_[e].a], gen[edges_[e].b]});
    }
    out.push_back(std::move(on_edges));
  }
  return out;
}

LineConfig ngon(int p) {
  if (p < 3) throw DomainError("a p-gon needs p >= 3, got " + std::to_string(p));
  std::vector<Edge> edges;
  Permutation rotation(p);
  for (int i = 0; i < p; ++i) {
    edges.push_back(Edge::between(i, (i + 1) % p));
    rotation[i] = (i + 1) % p;
  }
  return LineConfig::make(p, std::move(edges), {std::move(rotation)});
}

LineConfig cube(int r) {
  if (r < 2) throw DomainError("a cube needs dimension r >= 2, got " + std::to_string(r));
  if (r > 20) throw DomainError("cube dimension " + std::to_string(r) + " is too large");
  const int n = 1 << r;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < r; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) edges.push_back(Edge{v, w});
    }
  }
  std::vector<Permutation> flips;
  for (int bit = 0; bit < r; ++bit) {
    Permutation flip(n);
    for (int v = 0; v < n; ++v) flip[v] = v ^ (1 << bit);
    flips.push_back(std::move(flip));
  }
  return LineConfig::make(n, std::move(edges), std::move(flips));
}

LineConfig complete(int n) {
  if (n < 2) throw DomainError("a complete graph needs n >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back(Edge{i, j});
  }
  std::vector<Permutation> gens{from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = i;
    gens.push_back(from_cycles(n, {cycle}));
  }
  return LineConfig::make(n, std::move(edges), std::move(gens));
}

LineConfig disjoint_lines() {
  // Vertex 2i + j is the element (i, j) of (Z/2)^2.
  std::vector<Edge> edges{{0, 1}, {2, 3}};
  Permutation swap_lines = from_cycles(4, {{0, 2}, {1, 3}});
  Permutation swap_ends = from_cycles(4, {{0, 1}, {2, 3}});
  return LineConfig::make(4, std::move(edges), {std::move(swap_lines), std::move(swap_ends)},
                          {"00", "01", "10", "11"});
}

ConfigReport report(const LineConfig& config) {
  const int num_vertices = config.num_vertices();
  std::vector<std::vector<int>> adjacent(num_vertices);
  for (const Edge& edge : config.edges()) {
    adjacent[edge.a].push_back(edge.b);
    adjacent[edge.b].push_back(edge.a);
  }

  std::int64_t components = 0;
  std::vector<bool> visited(num_vertices, false);
  for (int root = 0; root < num_vertices; ++root) {
    if (visited[root]) continue;
    ++components;
    std::deque<int> queue{root};
    visited[root] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adjacent[v]) {
        if (!visited[w]) {
          visited[w] = true;
          queue.push_back(w);
        }
      }
    }
  }

  ConfigReport out;
  out.degree = config.num_edges();
  out.h0 = components;
  out.h1 = out.degree - num_vertices + components;
  const std::vector<Permutation> on_edges = config.edge_generators();
  out.edge_transitive =
      static_cast<int>(orbit(0, on_edges).size()) == config.num_edges();
  out.vertex_single_orbit =
      static_cast<int>(orbit(0, config.generators()).size()) == num_vertices;
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

bool is_pgon(const LineConfig& config, int p) {
  if (p < 3 || !is_prime(p)) return false;
  if (config.num_vertices() != p || config.num_edges() != p) return false;
  const std::vector<int> branches = config.branches();
  if (std::any_of(branches.begin(), branches.end(), [](int b) { return b != 2; })) {
    return false;
  }
  const ConfigReport rep = report(config);
  return rep.h0 == 1 && rep.edge_transitive;
}

bool descends(const LineConfig& config, bool single_orbit) {
  const std::vector<Permutation> on_edges = config.edge_generators();
  std::vector<bool> covered(config.num_edges(), false);
  int orbits = 0;
  for (int e = 0; e < config.num_edges(); ++e) {
    if (covered[e]) continue;
    ++orbits;
    for (int f : orbit(e, on_edges)) covered[f] = true;
  }
  return !single_orbit || orbits == 1;
}

}  // namespace sbhilb
