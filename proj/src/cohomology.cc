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

#include "sbhilb/cohomology.h"

#include <algorithm>
#include <string>
#include <utility>

#include "sbhilb/errors.h"

namespace sbhilb {
namespace {

std::size_t rank_of_vertices(const std::vector<std::vector<Rational>>& coords,
                             std::initializer_list<int> ids, std::size_t dim) {
  std::vector<std::vector<Rational>> rows;
  for (int id : ids) rows.push_back(coords[id]);
  return rank_of(rows, dim);
}

// Values of the monomials s^(m-j) t^j, j = 0..m, at the parameter (s, t).
std::vector<Rational> monomial_values(std::int64_t m, const Rational& s, const Rational& t) {
  auto power = [](const Rational& base, std::int64_t e) {
    Rational acc = 1;
    for (std::int64_t k = 0; k < e; ++k) acc *= base;
    return acc;
  };
  std::vector<Rational> out(m + 1);
  for (std::int64_t j = 0; j <= m; ++j) out[j] = power(s, m - j) * power(t, j);
  return out;
}

void check_transversal_union(const LineConfig& base,
                             const std::vector<std::vector<Rational>>& coords,
                             std::size_t dim) {
  const auto& labels = base.labels();
  const int num_vertices = base.num_vertices();
  // Independent vertex vectors make every check below automatic.
  if (rank_of(coords, dim) == static_cast<std::size_t>(num_vertices)) return;

  for (int u = 0; u < num_vertices; ++u) {
    for (int v = u + 1; v < num_vertices; ++v) {
      if (rank_of_vertices(coords, {u, v}, dim) < 2) {
        throw InvariantError("vertices " + labels[u] + " and " + labels[v] +
                             " have proportional coordinates");
      }
    }
  }

  std::vector<std::vector<int>> neighbours(num_vertices);
  for (const Edge& edge : base.edges()) {
    neighbours[edge.a].push_back(edge.b);
    neighbours[edge.b].push_back(edge.a);
  }
  for (int v = 0; v < num_vertices; ++v) {
    std::vector<std::vector<Rational>> rows{coords[v]};
    for (int w : neighbours[v]) rows.push_back(coords[w]);
    if (rank_of(rows, dim) != rows.size()) {
      throw InvariantError("lines through vertex " + labels[v] +
                           " do not have independent directions");
    }
  }

  const auto edges = base.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& line = edges[e];
    for (int v = 0; v < num_vertices; ++v) {
      if (v == line.a || v == line.b) continue;
      if (rank_of_vertices(coords, {line.a, line.b, v}, dim) < 3) {
        throw InvariantError("vertex " + labels[v] + " lies on line " + labels[line.a] +
                             " " + labels[line.b] + " without being an endpoint");
      }
    }
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const Edge& other = edges[f];
      if (other.a == line.a || other.a == line.b || other.b == line.a ||
          other.b == line.b) {
        continue;
      }
      if (rank_of_vertices(coords, {line.a, line.b, other.a, other.b}, dim) < 4) {
        throw InvariantError("lines " + labels[line.a] + " " + labels[line.b] + " and " +
                             labels[other.a] + " " + labels[other.b] +
                             " meet outside the listed vertices");
      }
    }
  }
}

}  // namespace

EmbeddedConfig EmbeddedConfig::make(LineConfig base, int ambient_dim,
                                    std::vector<std::vector<Rational>> coords) {
  if (ambient_dim < 3) {
    throw InvariantError("ambient dimension d must be at least 3, got " +
                         std::to_string(ambient_dim));
  }
  const auto& labels = base.labels();
  if (static_cast<int>(coords.size()) != base.num_vertices()) {
    throw InvariantError("expected coordinates for " + std::to_string(base.num_vertices()) +
                         " vertices, got " + std::to_string(coords.size()));
  }
  const std::size_t dim = static_cast<std::size_t>(ambient_dim);
  for (int v = 0; v < base.num_vertices(); ++v) {
    if (coords[v].size() != dim) {
      throw InvariantError("vertex " + labels[v] + " has " + std::to_string(coords[v].size()) +
                           " coordinates, expected " + std::to_string(dim));
    }
    if (std::all_of(coords[v].begin(), coords[v].end(), [](const Rational& x) { return x == 0; })) {
      throw InvariantError("vertex " + labels[v] + " has the zero vector as coordinates");
    }
  }
  for (const Edge& edge : base.edges()) {
    if (rank_of_vertices(coords, {edge.a, edge.b}, dim) < 2) {
      throw InvariantError("line " + labels[edge.a] + " " + labels[edge.b] +
                           " has proportional endpoints");
    }
  }
  check_transversal_union(base, coords, dim);
  return EmbeddedConfig(std::move(base), ambient_dim, std::move(coords));
}

bool EmbeddedConfig::spans() const {
  return rank_of(coords_, static_cast<std::size_t>(ambient_dim_)) ==
         static_cast<std::size_t>(ambient_dim_);
}

EmbeddedConfig standard_embedding(const LineConfig& config, int d) {
  if (config.num_vertices() > d) {
    throw DomainError(std::to_string(config.num_vertices()) +
                      " vertices do not fit on distinct coordinate points of P^" +
                      std::to_string(d - 1) + "; supply coordinates explicitly");
  }
  std::vector<std::vector<Rational>> coords(config.num_vertices(), std::vector<Rational>(d));
  for (int v = 0; v < config.num_vertices(); ++v) coords[v][v] = 1;
  return EmbeddedConfig::make(config, d, std::move(coords));
}

CohomReport twist_cohomology(const EmbeddedConfig& cfg, std::int64_t m) {
  if (m < 0) {
    throw DomainError("twist m = " + std::to_string(m) +
                      " is negative; only m >= 0 is supported");
  }
  const LineConfig& base = cfg.base();
  const auto edges = base.edges();
  const std::size_t per_edge = static_cast<std::size_t>(m) + 1;

  // A section on the line through A and B is a binary form f(s, t) of degree
  // m in the parametrization sA + tB. Its value at an endpoint, read in the
  // fibre trivialized by that endpoint's stored vector, is f(1,0) at A and
  // f(0,1) at B.
  const std::vector<Rational> at_first = monomial_values(m, 1, 0);
  const std::vector<Rational> at_second = monomial_values(m, 0, 1);

  // branch lists: (edge index, evaluation row) for each vertex
  std::vector<std::vector<std::pair<std::size_t, const std::vector<Rational>*>>> branches(
      base.num_vertices());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    branches[edges[e].a].emplace_back(e, &at_first);
    branches[edges[e].b].emplace_back(e, &at_second);
  }

  std::size_t num_conditions = 0;
  for (const auto& list : branches) num_conditions += list.size() - 1;
  RationalMatrix delta(num_conditions, edges.size() * per_edge);

  std::size_t row = 0;
  for (const auto& list : branches) {
    const auto& [first_edge, first_eval] = list.front();
    for (std::size_t k = 1; k < list.size(); ++k, ++row) {
      const auto& [edge, eval] = list[k];
      for (std::size_t j = 0; j < per_edge; ++j) {
        delta.at(row, first_edge * per_edge + j) += (*first_eval)[j];
        delta.at(row, edge * per_edge + j) -= (*eval)[j];
      }
    }
  }

  const std::size_t cols = delta.cols();
  const std::size_t rows = delta.rows();
  const std::size_t r = rank(std::move(delta));
  CohomReport out;
  out.m = m;
  out.h0 = static_cast<std::int64_t>(cols - r);
  out.h1 = static_cast<std::int64_t>(rows - r);
  out.chi = out.h0 - out.h1;
  out.spans = cfg.spans();
  return out;
}

SmoothingHypotheses smoothing_hypotheses(const EmbeddedConfig& cfg) {
  const std::vector<int> branches = cfg.base().branches();
  SmoothingHypotheses out;
  out.h1_O_equals_1 = twist_cohomology(cfg, 0).h1 == 1;
  out.h1_O1_vanishes = twist_cohomology(cfg, 1).h1 == 0;
  out.nodal = std::all_of(branches.begin(), branches.end(), [](int b) { return b == 2; });
  return out;
}

}  // namespace sbhilb
