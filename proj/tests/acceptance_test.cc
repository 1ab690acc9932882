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

// End-to-end acceptance checks, one PASS/FAIL line per criterion.
// Usage: acceptance_test <path-to-sbhilb-binary>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "sbhilb/classify.h"
#include "sbhilb/cohomology.h"
#include "sbhilb/constraints.h"
#include "sbhilb/lineconfig.h"
#include "sbhilb/numpoly.h"

namespace {

using namespace sbhilb;
using Clock = std::chrono::steady_clock;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int f = 3; f * f <= p; f += 2) {
    if (p % f == 0) return false;
  }
  return true;
}

// Components and cycle rank by union-find.
std::pair<std::int64_t, std::int64_t> graph_oracle(const LineConfig& c) {
  std::vector<int> parent(c.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Edge& e : c.edges()) parent[find(e.a)] = find(e.b);
  std::int64_t components = 0;
  for (int v = 0; v < c.num_vertices(); ++v) components += find(v) == v;
  return {components, c.num_edges() - c.num_vertices() + components};
}

bool valuation_oracle(std::int64_t x, std::int64_t n) {
  if (x == 0) return true;
  x = std::llabs(x);
  std::int64_t m = n;
  for (std::int64_t p = 2; m > 1; ++p) {
    int need = 0;
    while (m % p == 0) {
      m /= p;
      ++need;
    }
    if (need == 0) continue;
    if (p == 2) --need;
    std::int64_t y = x;
    int have = 0;
    while (y % p == 0) {
      y /= p;
      ++have;
    }
    if (have < need) return false;
  }
  return true;
}

Check criterion1() {
  Check c;
  const auto start = Clock::now();
  const auto profiles = enumerate_profiles(AlgebraInvariants::division(5, 5), {5, 0});
  const double elapsed = seconds_since(start);
  using Row = std::tuple<Narrative, std::int64_t, std::int64_t, std::vector<std::int64_t>>;
  std::set<Row> got;
  for (const auto& p : profiles) got.emplace(p.narrative, p.h0, p.h1, p.extra_point_degrees);
  const std::set<Row> expected{{Narrative::kSmoothGenusOne, 1, 1, {}},
                               {Narrative::kPGonOfLines, 1, 1, {}},
                               {Narrative::kSingularIntegral, 1, 6, {5}},
                               {Narrative::kNonReducedCurve, 6, 6, {}}};
  c.expect(profiles.size() == 4, "expected exactly 4 profiles, got " + std::to_string(profiles.size()));
  c.expect(got == expected, "profile set differs");
  c.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  return c;
}

Check criterion2() {
  Check c;
  const auto start = Clock::now();
  c.expect(h1_upper_bound(5, 1) == 6, "h1_upper_bound(5,1) != 6");
  c.expect(decompose({5, 0}) == BinomialDecomposition{10, 5}, "decompose(5t) != (10,5)");
  c.expect(hilb_nonempty({5, 0}), "hilb_nonempty(5t) false");
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> r_dist(0, 1000);
  std::uniform_int_distribution<std::int64_t> s_dist(-1000000, 1000000);
  for (int i = 0; i < 10000; ++i) {
    const NumPoly poly{r_dist(rng), s_dist(rng)};
    const BinomialDecomposition dec = decompose(poly);
    for (std::int64_t t : {-2, 0, 3, 11}) {
      // sum_{i=1}^{m1} (t + 2 - i) + (m0 - m1)
      std::int64_t gotzmann = dec.m0 - dec.m1;
      for (std::int64_t k = 1; k <= dec.m1; ++k) gotzmann += t + 2 - k;
      c.expect(gotzmann == poly(t) && dec.evaluate(t) == poly(t),
               "round trip failed for " + to_string(poly));
    }
  }
  c.expect(seconds_since(start) < 1.0, "round trip sweep too slow");
  return c;
}

Check criterion3() {
  Check c;
  const ConfigReport cube3 = report(cube(3));
  c.expect(cube3.degree == 12 && cube3.h1 == 5, "cube(3)");
  c.expect(report(complete(4)).degree == 6, "complete(4)");
  const ConfigReport lines = report(disjoint_lines());
  c.expect(lines.degree == 2 && lines.h0 == 2 && lines.h1 == 0, "disjoint_lines()");
  for (int p = 3; p <= 31; ++p) {
    if (!odd_prime(p)) continue;
    const LineConfig polygon = ngon(p);
    const ConfigReport rep = report(polygon);
    const auto [components, genus] = graph_oracle(polygon);
    c.expect(rep.degree == p && rep.h1 == 1 && genus == 1 && components == 1,
             "ngon(" + std::to_string(p) + ")");
  }
  for (const LineConfig& config : {cube(3), complete(4), disjoint_lines()}) {
    const auto [components, genus] = graph_oracle(config);
    const ConfigReport rep = report(config);
    c.expect(rep.h0 == components && rep.h1 == genus, "union-find oracle disagrees");
  }
  return c;
}

Check criterion4() {
  Check c;
  const auto start = Clock::now();
  for (int n = 3; n <= 10; ++n) {
    const EmbeddedConfig cfg = standard_embedding(ngon(n), n);
    const CohomReport m0 = twist_cohomology(cfg, 0);
    c.expect(m0.h0 == 1 && m0.h1 == 1, "n-gon m=0 for n=" + std::to_string(n));
    c.expect(twist_cohomology(cfg, 1).h1 == 0, "n-gon m=1 for n=" + std::to_string(n));
  }
  std::vector<LineConfig> families;
  for (int n = 3; n <= 10; ++n) families.push_back(ngon(n));
  for (int r = 2; r <= 3; ++r) families.push_back(cube(r));
  for (int n = 2; n <= 6; ++n) families.push_back(complete(n));
  families.push_back(disjoint_lines());
  for (const LineConfig& config : families) {
    const EmbeddedConfig cfg = standard_embedding(config, std::max(3, config.num_vertices()));
    const auto [components, genus] = graph_oracle(config);
    for (std::int64_t m = 0; m <= 3; ++m) {
      const CohomReport rep = twist_cohomology(cfg, m);
      // chi(O_C(m)) = m deg C + chi(O_C)
      c.expect(rep.chi == rep.h0 - rep.h1 &&
                   rep.chi == m * config.num_edges() + components - genus,
               "chi identity at m=" + std::to_string(m));
    }
  }
  c.expect(seconds_since(start) < 5.0, "cohomology sweep too slow");
  return c;
}

Check criterion5() {
  Check c;
  for (std::int64_t n = 3; n <= 12; ++n) {
    c.expect(normal_bundle_euler(n, n, 1) == n * n, "n=" + std::to_string(n));
  }
  return c;
}

Check criterion6() {
  Check c;
  for (std::int64_t n = 1; n <= 500; ++n) {
    for (std::int64_t x = 1; x <= 500; ++x) {
      const bool expected = valuation_oracle(x, n);
      c.expect(degree_admissible(x, n) == expected && euler_admissible(x, n) == expected &&
                   euler_admissible(-x, n) == expected,
               "x=" + std::to_string(x) + " n=" + std::to_string(n));
    }
  }
  for (std::int64_t n = 1; n <= 1000; ++n) {
    const std::int64_t least = min_curve_degree(n);
    bool ok = degree_admissible(least, n);
    for (std::int64_t x = 1; x < least && ok; ++x) ok = !degree_admissible(x, n);
    c.expect(ok, "min_curve_degree(" + std::to_string(n) + ")");
  }
  return c;
}

Check criterion7() {
  Check c;
  for (std::int64_t n = 4; n <= 12; ++n) {
    c.expect(castelnuovo(n, n).g_max == 1, "castelnuovo(n,n) for n=" + std::to_string(n));
  }
  for (std::int64_t d = 3; d <= 20; ++d) {
    for (std::int64_t p = 1; p < 100; ++p) {
      c.expect(castelnuovo(p, d).g_max <= castelnuovo(p + 1, d).g_max,
               "monotonicity at p=" + std::to_string(p) + " d=" + std::to_string(d));
    }
  }
  return c;
}

Check criterion8() {
  Check c;
  for (int p = 3; p <= 13; ++p) {
    if (!odd_prime(p)) continue;
    const SubschemeProfile profile = reducible_case(p);
    const ConfigReport rep = report(ngon(p));
    const CohomReport coh = twist_cohomology(standard_embedding(ngon(p), p), 0);
    c.expect(profile.curve_degree == rep.degree && rep.degree == p &&
                 profile.h0 == rep.h0 && rep.h0 == coh.h0 &&
                 profile.h1 == rep.h1 && rep.h1 == coh.h1,
             "p=" + std::to_string(p));
  }
  return c;
}

struct ProcessResult {
  int status = -1;
  std::string output;
};

ProcessResult run_process(const std::string& command) {
  ProcessResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

Check criterion9(const std::string& binary) {
  Check c;
  const std::string exe = "'" + binary + "'";
  const std::string empty_cfg = std::string("'") + SBHILB_TEST_DATA + "/empty.cfg'";
  struct Example {
    std::string args;
    int status;
  };
  const std::vector<Example> examples{
      {"feasible --degree 5 --index 5 --exponent 5 --division --poly 5,0", 0},
      {"family ngon 5 --embed standard --cohomology 0,1", 0},
      {"check-config " + empty_cfg, 4},
  };
  for (const Example& example : examples) {
    for (const std::string format : {"table", "json"}) {
      const std::string command = exe + " " + example.args + " --format " + format;
      const ProcessResult first = run_process(command);
      c.expect(first.status == example.status,
               command + " exited " + std::to_string(first.status));
      for (int i = 1; i < 5; ++i) {
        const ProcessResult again = run_process(command);
        c.expect(again.status == first.status && again.output == first.output,
                 command + " differs on run " + std::to_string(i + 1));
      }
      if (format == "json" && example.status == 0) {
        try {
          const auto doc = nlohmann::ordered_json::parse(first.output);
          c.expect(doc.dump(2) + "\n" == first.output, command + " does not round-trip");
          c.expect(doc.value("schema_version", 0) == 1, command + " lacks schema_version");
        } catch (const std::exception& e) {
          c.expect(false, command + ": " + e.what());
        }
      }
    }
  }
  const ProcessResult feasible = run_process(exe + " " + examples[0].args);
  int profile_rows = 0;
  std::istringstream lines(feasible.output);
  for (std::string line; std::getline(lines, line);) {
    profile_rows += line.find("classified") != std::string::npos;
  }
  c.expect(profile_rows == 4, "feasible table has " + std::to_string(profile_rows) + " rows");
  const ProcessResult family = run_process(exe + " " + examples[1].args);
  c.expect(family.output.find("m  h0  h1  chi\n0  1   1   0\n1  5   0   5\n") != std::string::npos,
           "family cohomology table");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance_test <sbhilb binary>\n";
    return 2;
  }
  unsetenv("SBHILB_FORMAT");
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"1 quintic profile enumeration", criterion1},
      {"2 genus bound and decomposition round trip", criterion2},
      {"3 standard family reports", criterion3},
      {"4 cohomology witnesses and chi identity", criterion4},
      {"5 normal bundle count", criterion5},
      {"6 divisibility against valuations", criterion6},
      {"7 Castelnuovo bound", criterion7},
      {"8 p-gon cross-module consistency", criterion8},
      {"9 CLI determinism and JSON round trip", [&] { return criterion9(argv[1]); }},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Check result;
    try {
      result = check();
    } catch (const std::exception& e) {
      result.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (result.ok() ? "PASS " : "FAIL ") << name << '\n';
    for (const std::string& failure : result.failures()) std::cout << "     " << failure << '\n';
    failed += !result.ok();
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << '\n';
  return failed == 0 ? 0 : 1;
}
