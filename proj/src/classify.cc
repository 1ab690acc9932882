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

#include "sbhilb/classify.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "sbhilb/errors.h"
#include "sbhilb/lineconfig.h"

namespace sbhilb {
namespace {

using PointDegrees = std::vector<std::int64_t>;

// Residual points are closed points, each of degree divisible by n. Above
// this many units of n the partition count grows past what is useful to
// print.
constexpr std::int64_t kMaxResidualUnits = 40;

void partitions_into(std::int64_t remaining, std::int64_t largest, PointDegrees& current,
                     std::vector<PointDegrees>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::int64_t part = std::min(remaining, largest); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

// Multisets of closed-point degrees summing to `total`, largest first.
std::vector<PointDegrees> residual_point_sets(std::int64_t total, std::int64_t n) {
  if (total < 0 || total % n != 0) return {};
  const std::int64_t units = total / n;
  if (units > kMaxResidualUnits) {
    throw PreconditionError("residual points of total degree " + std::to_string(total) +
                            " admit too many splittings to enumerate (limit " +
                            std::to_string(kMaxResidualUnits * n) + ")");
  }
  std::vector<PointDegrees> unit_parts;
  PointDegrees current;
  partitions_into(units, units, current, unit_parts);
  for (PointDegrees& parts : unit_parts) {
    for (std::int64_t& part : parts) part *= n;
  }
  return unit_parts;
}

class ProfileBuilder {
 public:
  ProfileBuilder(const AlgebraInvariants& alg, const NumPoly& poly)
      : n_(alg.index()), s_(poly.s) {}

  // Adds one profile per way of completing C to V with closed points.
  void add(SubschemeProfile curve, bool tag_points_separately = false) {
    const std::int64_t chi_curve = curve.h0 - curve.h1;
    for (PointDegrees& points : residual_point_sets(s_ - chi_curve, n_)) {
      SubschemeProfile profile = curve;
      if (tag_points_separately && !points.empty()) {
        profile.narrative = Narrative::kWithResidualPoint;
      }
      profile.extra_point_degrees = std::move(points);
      profiles_.push_back(std::move(profile));
    }
  }

  std::vector<SubschemeProfile> finish() && {
    auto key = [](const SubschemeProfile& p) {
      return std::tie(p.narrative, p.h0, p.h1, p.extra_point_degrees, p.geom_connected,
                      p.standing);
    };
    std::sort(profiles_.begin(), profiles_.end(),
              [&](const SubschemeProfile& a, const SubschemeProfile& b) {
                return key(a) < key(b);
              });
    profiles_.erase(std::unique(profiles_.begin(), profiles_.end()), profiles_.end());
    return std::move(profiles_);
  }

 private:
  std::int64_t n_;
  std::int64_t s_;
  std::vector<SubschemeProfile> profiles_;
};

SubschemeProfile curve_profile(std::int64_t degree, std::int64_t h0, std::int64_t h1,
                               Narrative tag, Standing standing) {
  SubschemeProfile p;
  p.curve_degree = degree;
  p.h0 = h0;
  p.h1 = h1;
  p.narrative = tag;
  p.standing = standing;
  return p;
}

}  // namespace

std::string_view to_string(Narrative tag) {
  switch (tag) {
    case Narrative::kSmoothGenusOne: return "SmoothGenusOne";
    case Narrative::kSingularIntegral: return "SingularIntegral";
    case Narrative::kPGonOfLines: return "PGonOfLines";
    case Narrative::kNonReducedCurve: return "NonReducedCurve";
    case Narrative::kWithResidualPoint: return "WithResidualPoint";
    case Narrative::kReducibleCurve: return "ReducibleCurve";
  }
  return "?";
}

std::string_view to_string(Standing standing) {
  switch (standing) {
    case Standing::kClassified: return "classified";
    case Standing::kExtrapolated: return "extrapolated";
    case Standing::kCandidate: return "candidate";
  }
  return "?";
}

std::int64_t SubschemeProfile::euler_characteristic() const {
  return h0 - h1 + std::accumulate(extra_point_degrees.begin(), extra_point_degrees.end(),
                                   std::int64_t{0});
}

bool is_settled_regime(const AlgebraInvariants& alg, const NumPoly& poly) {
  const std::int64_t n = alg.index();
  return alg.is_division() && n > 2 && is_prime(n) && poly.s == 0 &&
         poly.r == min_curve_degree(n);
}

SubschemeProfile reducible_case(std::int64_t p) {
  if (p <= 2 || !is_prime(p)) {
    throw DomainError("the p-gon case needs an odd prime index, got " + std::to_string(p));
  }
  if (p > 9973) throw DomainError("index " + std::to_string(p) + " is too large");
  const LineConfig polygon = ngon(static_cast<int>(p));
  const ConfigReport rep = report(polygon);
  if (!is_pgon(polygon, static_cast<int>(p)) || rep.degree != p || rep.h0 != 1 ||
      rep.h1 != 1) {
    throw std::logic_error("ngon(" + std::to_string(p) + ") is not a p-gon of genus one");
  }
  SubschemeProfile profile =
      curve_profile(rep.degree, rep.h0, rep.h1, Narrative::kPGonOfLines, Standing::kClassified);
  profile.geom_connected = true;
  profile.geom_reduced = true;
  profile.geom_irreducible = false;
  return profile;
}

std::vector<SubschemeProfile> enumerate_profiles(const AlgebraInvariants& alg,
                                                 const NumPoly& poly) {
  const std::int64_t n = alg.index();
  const std::int64_t d = alg.degree();
  if (!alg.is_division()) {
    throw PreconditionError("the algebra is not a division algebra; curves of degree below "
                            "the index are not excluded");
  }
  if (poly.r != min_curve_degree(n)) {
    throw PreconditionError("leading coefficient r = " + std::to_string(poly.r) +
                            " is not the minimal curve degree " +
                            std::to_string(min_curve_degree(n)) + " for index " +
                            std::to_string(n) + "; the unique-curve argument does not apply");
  }
  if (!hilb_nonempty(poly)) {
    const BinomialDecomposition dec = decompose(poly);
    throw PreconditionError("Hilbert scheme of " + to_string(poly) + " is empty: (m0, m1) = (" +
                            std::to_string(dec.m0) + ", " + std::to_string(dec.m1) +
                            ") violates m0 >= m1 >= 0");
  }

  const std::int64_t r = poly.r;
  const bool settled = is_settled_regime(alg, poly);
  // For prime index and s = 0 the curve is geometrically connected.
  const std::int64_t max_components = settled ? 1 : r;
  const Standing standing = settled ? Standing::kClassified : Standing::kCandidate;
  ProfileBuilder builder(alg, poly);

  // Geometrically integral C. Its genus is at most the Castelnuovo bound; it
  // cannot be 0, because a geometrically rational curve carries a point of
  // degree 2 and every closed point of X has degree divisible by n > 2. With
  // r <= n = d the bound is at most 1, so the normalization has genus 1 and
  // C is smooth exactly when h1 = 1.
  const CastelnuovoBound bound = castelnuovo(r, d);
  if (bound.g_max >= 1) {
    const std::int64_t geometric_genus = 1;
    for (std::int64_t h1 = geometric_genus; h1 <= h1_upper_bound(r, 1); ++h1) {
      if (!euler_admissible(1 - h1, n)) continue;
      const bool smooth = h1 == geometric_genus;
      SubschemeProfile curve =
          curve_profile(r, 1, h1, smooth ? Narrative::kSmoothGenusOne : Narrative::kSingularIntegral,
                        standing);
      curve.geom_connected = curve.geom_reduced = curve.geom_irreducible = true;
      builder.add(std::move(curve), /*tag_points_separately=*/smooth);
    }
  }

  // Geometrically reducible, reduced C.
  if (settled) {
    builder.add(reducible_case(n));
  } else if (r >= 2) {
    for (std::int64_t h0 = 1; h0 <= max_components; ++h0) {
      for (std::int64_t h1 = 0; h1 <= h1_upper_bound(r, h0); ++h1) {
        if (!euler_admissible(h0 - h1, n)) continue;
        SubschemeProfile curve = curve_profile(r, h0, h1, Narrative::kReducibleCurve, standing);
        curve.geom_connected = h0 == 1;
        curve.geom_reduced = true;
        builder.add(std::move(curve));
      }
    }
  }

  // Nonreduced C. C_red is a reduced curve of the same degree with
  // h1(C) = h1(C_red) and h0(C) > h0(C_red).
  const Standing nonreduced_standing =
      settled ? (n == 5 ? Standing::kClassified : Standing::kExtrapolated) : Standing::kCandidate;
  for (std::int64_t h0_red = 1; h0_red <= max_components; ++h0_red) {
    for (std::int64_t h1 = 0; h1 <= h1_upper_bound(r, h0_red); ++h1) {
      if (!euler_admissible(h0_red - h1, n)) continue;
      // Residual points have nonnegative total degree, so chi(C) <= s. Only
      // h0 with chi(C) divisible by f(n) can pass, so step by f(n).
      const std::int64_t step = min_curve_degree(n);
      std::int64_t first = h0_red + 1;
      first += ((h1 - first) % step + step) % step;
      for (std::int64_t h0 = first; h0 - h1 <= poly.s; h0 += step) {
        if (!euler_admissible(h0 - h1, n)) continue;
        SubschemeProfile curve =
            curve_profile(r, h0, h1, Narrative::kNonReducedCurve, nonreduced_standing);
        curve.geom_connected = h0_red == 1;
        builder.add(std::move(curve));
      }
    }
  }

  std::vector<SubschemeProfile> profiles = std::move(builder).finish();
  for (const SubschemeProfile& p : profiles) {
    if (p.euler_characteristic() != poly.s) {
      throw std::logic_error("profile with chi != s escaped the enumeration");
    }
  }
  return profiles;
}

}  // namespace sbhilb
