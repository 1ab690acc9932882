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

#include <random>

#include <gtest/gtest.h>

#include "sbhilb/errors.h"

namespace sbhilb {
namespace {

using Coords = std::vector<std::vector<Rational>>;

Coords unit_vectors(int count, int d) {
  Coords out(count, std::vector<Rational>(d));
  for (int v = 0; v < count; ++v) out[v][v] = 1;
  return out;
}

LineConfig cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge::between(i, (i + 1) % n));
  return LineConfig::make(n, edges, {});
}

// Five general points of P^3 joined cyclically.
EmbeddedConfig pentagon_in_p3() {
  Coords coords = unit_vectors(4, 4);
  coords.push_back({1, 1, 1, 1});
  return EmbeddedConfig::make(ngon(5), 4, coords);
}

// Applies an invertible unitriangular change of coordinates and rescales
// each vertex vector.
Coords recoordinatize(const Coords& coords, std::mt19937& rng) {
  const std::size_t d = coords.front().size();
  std::vector<std::vector<Rational>> g(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    g[i][i] = Rational(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3));
    for (std::size_t j = i + 1; j < d; ++j) g[i][j] = Rational(static_cast<int>(rng() % 9) - 4, 3);
  }
  Coords out;
  for (const auto& v : coords) {
    std::vector<Rational> w(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) w[i] += g[i][j] * v[j];
    }
    const Rational scale(static_cast<int>(rng() % 5) + 1, static_cast<int>(rng() % 3) + 1);
    for (auto& x : w) x *= rng() % 2 ? scale : Rational(-scale);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<LineConfig> standard_families() {
  std::vector<LineConfig> out;
  for (int n = 3; n <= 10; ++n) out.push_back(ngon(n));
  out.push_back(cube(2));
  out.push_back(cube(3));
  for (int n = 2; n <= 6; ++n) out.push_back(complete(n));
  out.push_back(disjoint_lines());
  return out;
}

TEST(TwistCohomology, NGonWitnesses) {
  for (int n = 3; n <= 10; ++n) {
    const EmbeddedConfig cfg = standard_embedding(ngon(n), n);
    const CohomReport m0 = twist_cohomology(cfg, 0);
    EXPECT_EQ(m0.h0, 1) << n;
    EXPECT_EQ(m0.h1, 1) << n;
    EXPECT_EQ(m0.chi, 0) << n;
    EXPECT_TRUE(m0.spans);
    EXPECT_EQ(twist_cohomology(cfg, 1).h1, 0) << n;
    EXPECT_EQ(twist_cohomology(cfg, 1).h0, n) << n;
    EXPECT_EQ(smoothing_hypotheses(cfg), (SmoothingHypotheses{true, true, true}));
  }
}

TEST(TwistCohomology, PlaneTriangleIsACubic) {
  const EmbeddedConfig cfg = standard_embedding(ngon(3), 3);
  // h0(O_C(m)) = 3m for a plane cubic once m >= 1.
  for (std::int64_t m = 1; m <= 5; ++m) {
    const CohomReport rep = twist_cohomology(cfg, m);
    EXPECT_EQ(rep.h0, 3 * m);
    EXPECT_EQ(rep.h1, 0);
  }
}

TEST(TwistCohomology, EulerCharacteristicIdentity) {
  for (const LineConfig& config : standard_families()) {
    const int d = std::max(3, config.num_vertices());
    const EmbeddedConfig cfg = standard_embedding(config, d);
    const ConfigReport rep = report(config);
    for (std::int64_t m = 0; m <= 3; ++m) {
      const CohomReport c = twist_cohomology(cfg, m);
      ASSERT_EQ(c.chi, c.h0 - c.h1);
      ASSERT_EQ(c.chi, m * rep.degree + rep.h0 - rep.h1) << m;
    }
    const CohomReport c0 = twist_cohomology(cfg, 0);
    EXPECT_EQ(c0.h0, rep.h0);
    EXPECT_EQ(c0.h1, rep.h1);
  }
}

TEST(TwistCohomology, CubeAndComplete) {
  const CohomReport cube3 = twist_cohomology(standard_embedding(cube(3), 8), 0);
  EXPECT_EQ(cube3.h0, 1);
  EXPECT_EQ(cube3.h1, 5);
  const EmbeddedConfig k4 = standard_embedding(complete(4), 4);
  EXPECT_EQ(twist_cohomology(k4, 0).h1, 3);
  EXPECT_EQ(smoothing_hypotheses(k4).nodal, false);
  const CohomReport lines = twist_cohomology(standard_embedding(disjoint_lines(), 4), 0);
  EXPECT_EQ(lines.h0, 2);
  EXPECT_EQ(lines.h1, 0);
}

TEST(TwistCohomology, IndependentOfCoordinates) {
  std::mt19937 rng(31337);
  for (const LineConfig& config : standard_families()) {
    const int d = std::max(3, config.num_vertices());
    const EmbeddedConfig base = standard_embedding(config, d);
    const Coords moved = recoordinatize({base.coords().begin(), base.coords().end()}, rng);
    const EmbeddedConfig other = EmbeddedConfig::make(config, d, moved);
    for (std::int64_t m = 0; m <= 2; ++m) {
      ASSERT_EQ(twist_cohomology(base, m), twist_cohomology(other, m));
    }
  }
  const EmbeddedConfig pent = pentagon_in_p3();
  const Coords moved = recoordinatize({pent.coords().begin(), pent.coords().end()}, rng);
  const EmbeddedConfig other = EmbeddedConfig::make(ngon(5), 4, moved);
  for (std::int64_t m = 0; m <= 2; ++m) {
    EXPECT_EQ(twist_cohomology(pent, m), twist_cohomology(other, m));
  }
}

TEST(TwistCohomology, DependentPentagon) {
  const EmbeddedConfig cfg = pentagon_in_p3();
  EXPECT_TRUE(cfg.spans());
  EXPECT_EQ(twist_cohomology(cfg, 0), (CohomReport{0, 1, 1, 0, true}));
  EXPECT_EQ(twist_cohomology(cfg, 1).h1, 0);
  EXPECT_EQ(twist_cohomology(cfg, 1).h0, 5);
}

TEST(TwistCohomology, RejectsNegativeTwist) {
  EXPECT_THROW(twist_cohomology(standard_embedding(ngon(3), 3), -1), DomainError);
}

TEST(StandardEmbedding, NeedsRoom) {
  EXPECT_THROW(standard_embedding(ngon(5), 4), DomainError);
  EXPECT_FALSE(standard_embedding(ngon(3), 5).spans());
}

TEST(EmbeddedConfig, RejectsBadCoordinates) {
  const LineConfig tri = ngon(3);
  EXPECT_THROW(EmbeddedConfig::make(tri, 2, {{1, 0}, {0, 1}, {1, 1}}), InvariantError);
  EXPECT_THROW(EmbeddedConfig::make(tri, 3, unit_vectors(2, 3)), InvariantError);
  Coords short_row = unit_vectors(3, 3);
  short_row[1].pop_back();
  EXPECT_THROW(EmbeddedConfig::make(tri, 3, short_row), InvariantError);
  Coords zero = unit_vectors(3, 3);
  zero[2] = {0, 0, 0};
  EXPECT_THROW(EmbeddedConfig::make(tri, 3, zero), InvariantError);
  Coords proportional = unit_vectors(3, 3);
  proportional[1] = {Rational(-2, 3), 0, 0};
  EXPECT_THROW(EmbeddedConfig::make(tri, 3, proportional), InvariantError);
}

TEST(EmbeddedConfig, RejectsNonTransversalUnions) {
  // Square in P^2: opposite sides meet away from the vertices.
  Coords square = unit_vectors(3, 3);
  square.push_back({1, 1, 1});
  EXPECT_THROW(EmbeddedConfig::make(cycle_graph(4), 3, square), InvariantError);

  // Collinear vertices of a triangle.
  EXPECT_THROW(EmbeddedConfig::make(ngon(3), 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}),
               InvariantError);

  // Path 0-1-2 plus an extra vertex 3 lying on line 0-1.
  const LineConfig path_plus =
      LineConfig::make(4, {{0, 1}, {1, 2}, {2, 3}}, {});
  EXPECT_THROW(EmbeddedConfig::make(path_plus, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 0}}),
               InvariantError);

  // Three coplanar lines through one point of P^3.
  const LineConfig star = LineConfig::make(4, {{0, 1}, {0, 2}, {0, 3}}, {});
  EXPECT_THROW(EmbeddedConfig::make(star, 4,
                                    {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, 0}}),
               InvariantError);
  EXPECT_NO_THROW(EmbeddedConfig::make(star, 4, unit_vectors(4, 4)));
}

}  // namespace
}  // namespace sbhilb
