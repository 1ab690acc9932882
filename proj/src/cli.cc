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

#include "sbhilb/cli.h"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "sbhilb/classify.h"
#include "sbhilb/cohomology.h"
#include "sbhilb/config_io.h"
#include "sbhilb/constraints.h"
#include "sbhilb/errors.h"
#include "sbhilb/lineconfig.h"

namespace sbhilb::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string_view command_name(Command command) {
  switch (command) {
    case Command::kFeasible: return "feasible";
    case Command::kClassify: return "classify";
    case Command::kFamily: return "family";
    case Command::kCohomology: return "cohomology";
    case Command::kCheckConfig: return "check-config";
  }
  return "?";
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string join_points(const std::vector<std::int64_t>& degrees) {
  if (degrees.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    out += (i == 0 ? "" : "+") + std::to_string(degrees[i]);
  }
  return out;
}

// Left-aligned columns separated by two spaces; no trailing whitespace.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void render(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

// "key  value" lines with aligned values.
class Fields {
 public:
  void add(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), std::move(value));
  }
  void render(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [key, value] : entries_) width = std::max(width, key.size());
    for (const auto& [key, value] : entries_) {
      out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

Json header_json(Command command) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = std::string(command_name(command));
  return doc;
}

void emit_json(const Json& doc, std::ostream& out) { out << doc.dump(2) << '\n'; }

AlgebraInvariants make_algebra(const AlgebraSpec& spec) {
  return AlgebraInvariants::make(spec.degree, spec.index, spec.exponent, spec.division);
}

Json algebra_json(const AlgebraInvariants& alg) {
  Json j;
  j["degree"] = alg.degree();
  j["index"] = alg.index();
  j["exponent"] = alg.exponent();
  j["division"] = alg.is_division();
  return j;
}

std::string algebra_text(const AlgebraInvariants& alg) {
  return "d=" + std::to_string(alg.degree()) + " n=" + std::to_string(alg.index()) +
         " m=" + std::to_string(alg.exponent()) + (alg.is_division() ? " division" : "");
}

Json poly_json(const NumPoly& poly) {
  Json j;
  j["r"] = poly.r;
  j["s"] = poly.s;
  j["text"] = to_string(poly);
  return j;
}

Json profile_json(const SubschemeProfile& p) {
  Json j;
  j["narrative"] = std::string(to_string(p.narrative));
  j["curve_degree"] = p.curve_degree;
  j["h0"] = p.h0;
  j["h1"] = p.h1;
  j["chi"] = p.euler_characteristic();
  j["geom_connected"] = p.geom_connected;
  j["geom_reduced"] = p.geom_reduced;
  j["geom_irreducible"] = p.geom_irreducible;
  j["extra_point_degrees"] = p.extra_point_degrees;
  j["standing"] = std::string(to_string(p.standing));
  return j;
}

void render_profiles(const std::vector<SubschemeProfile>& profiles, std::ostream& out) {
  Table table({"narrative", "deg", "h0", "h1", "connected", "reduced", "irreducible", "points",
               "standing"});
  for (const SubschemeProfile& p : profiles) {
    table.add({std::string(to_string(p.narrative)), std::to_string(p.curve_degree),
               std::to_string(p.h0), std::to_string(p.h1), yes_no(p.geom_connected),
               yes_no(p.geom_reduced), yes_no(p.geom_irreducible),
               join_points(p.extra_point_degrees), std::string(to_string(p.standing))});
  }
  table.render(out);
}

std::string regime_label(const AlgebraInvariants& alg, const NumPoly& poly) {
  return is_settled_regime(alg, poly) ? "classification" : "constraint-filtered candidates";
}

// Reason the enumeration hypotheses fail, if they do.
std::optional<std::string> enumeration_blocker(const AlgebraInvariants& alg,
                                               const NumPoly& poly) {
  try {
    enumerate_profiles(alg, poly);
  } catch (const PreconditionError& e) {
    return std::string(e.what());
  }
  return std::nullopt;
}

int run_feasible(const Query& q, std::ostream& out) {
  const AlgebraInvariants alg = make_algebra(*q.algebra);
  const NumPoly poly = *q.poly;
  const BinomialDecomposition dec = decompose(poly);
  const std::int64_t n = alg.index();
  const bool nonempty = hilb_nonempty(poly);
  // Degree checks only make sense when there is a curve part.
  const bool has_curve = poly.r >= 1;
  const bool degree_ok = has_curve && degree_admissible(poly.r, n);
  const bool euler_ok = euler_admissible(poly.s, n);
  const std::int64_t bound = has_curve ? h1_upper_bound(poly.r, 1) : 0;
  const std::optional<std::string> blocker = enumeration_blocker(alg, poly);
  std::vector<SubschemeProfile> profiles;
  if (!blocker) profiles = enumerate_profiles(alg, poly);
  const bool feasible = nonempty && (degree_ok || !has_curve) && euler_ok &&
                        (blocker.has_value() || !profiles.empty());

  if (q.format == OutputFormat::kJson) {
    Json doc = header_json(q.command);
    doc["algebra"] = algebra_json(alg);
    doc["polynomial"] = poly_json(poly);
    Json checks;
    checks["m0"] = dec.m0;
    checks["m1"] = dec.m1;
    checks["hilb_nonempty"] = nonempty;
    checks["min_curve_degree"] = min_curve_degree(n);
    checks["degree_admissible"] = has_curve ? Json(degree_ok) : Json(nullptr);
    checks["euler_admissible"] = euler_ok;
    checks["h1_upper_bound_connected"] = has_curve ? Json(bound) : Json(nullptr);
    doc["checks"] = checks;
    doc["enumerated"] = !blocker.has_value();
    if (blocker) {
      doc["not_enumerated_reason"] = *blocker;
    } else {
      doc["regime"] = regime_label(alg, poly);
      Json list = Json::array();
      for (const auto& p : profiles) list.push_back(profile_json(p));
      doc["profiles"] = list;
    }
    doc["feasible"] = feasible;
    emit_json(doc, out);
    return kOk;
  }

  Fields fields;
  fields.add("algebra", algebra_text(alg));
  fields.add("polynomial", to_string(poly));
  fields.add("decomposition", "m0=" + std::to_string(dec.m0) + " m1=" + std::to_string(dec.m1));
  fields.add("hilb_nonempty", yes_no(nonempty));
  fields.add("min_curve_degree", std::to_string(min_curve_degree(n)));
  fields.add("degree_admissible", has_curve ? yes_no(degree_ok) : "n/a");
  fields.add("euler_admissible", yes_no(euler_ok));
  fields.add("h1_upper_bound(h0=1)", has_curve ? std::to_string(bound) : "n/a");
  fields.add("feasible", yes_no(feasible));
  if (blocker) {
    fields.add("profiles", "not enumerated: " + *blocker);
    fields.render(out);
    return kOk;
  }
  fields.add("regime", regime_label(alg, poly));
  fields.add("profiles", std::to_string(profiles.size()));
  fields.render(out);
  out << '\n';
  render_profiles(profiles, out);
  return kOk;
}

int run_classify(const Query& q, std::ostream& out) {
  const AlgebraInvariants alg = make_algebra(*q.algebra);
  const NumPoly poly = *q.poly;
  const std::vector<SubschemeProfile> profiles = enumerate_profiles(alg, poly);
  if (q.format == OutputFormat::kJson) {
    Json doc = header_json(q.command);
    doc["algebra"] = algebra_json(alg);
    doc["polynomial"] = poly_json(poly);
    doc["regime"] = regime_label(alg, poly);
    Json list = Json::array();
    for (const auto& p : profiles) list.push_back(profile_json(p));
    doc["profiles"] = list;
    emit_json(doc, out);
    return kOk;
  }
  Fields fields;
  fields.add("algebra", algebra_text(alg));
  fields.add("polynomial", to_string(poly));
  fields.add("regime", regime_label(alg, poly));
  fields.add("profiles", std::to_string(profiles.size()));
  fields.render(out);
  out << '\n';
  render_profiles(profiles, out);
  return kOk;
}

struct ConfigAnalysis {
  ConfigReport report;
  bool pgon = false;
  std::optional<EmbeddedConfig> embedded;
  std::string embedding_kind;
  std::vector<CohomReport> cohomology;
  std::optional<SmoothingHypotheses> smoothing;
};

ConfigAnalysis analyze(const LineConfig& config, std::optional<EmbeddedConfig> embedded,
                       std::string embedding_kind, const std::vector<std::int64_t>& twists) {
  ConfigAnalysis a;
  a.report = report(config);
  a.pgon = is_pgon(config, config.num_vertices());
  if (embedded) {
    for (std::int64_t m : twists) a.cohomology.push_back(twist_cohomology(*embedded, m));
    a.smoothing = smoothing_hypotheses(*embedded);
    a.embedding_kind = std::move(embedding_kind);
    a.embedded = std::move(embedded);
  }
  return a;
}

Json analysis_json(const LineConfig& config, const ConfigAnalysis& a) {
  Json doc;
  doc["vertices"] = config.num_vertices();
  doc["generators"] = config.generators().size();
  Json rep;
  rep["degree"] = a.report.degree;
  rep["h0"] = a.report.h0;
  rep["h1"] = a.report.h1;
  rep["edge_transitive"] = a.report.edge_transitive;
  rep["vertex_single_orbit"] = a.report.vertex_single_orbit;
  rep["is_pgon"] = a.pgon;
  rep["descends_single_orbit"] = descends(config, true);
  doc["report"] = rep;
  if (a.embedded) {
    Json emb;
    emb["kind"] = a.embedding_kind;
    emb["ambient_dim"] = a.embedded->ambient_dim();
    emb["spans"] = a.embedded->spans();
    doc["embedding"] = emb;
    Json coh = Json::array();
    for (const CohomReport& c : a.cohomology) {
      Json row;
      row["m"] = c.m;
      row["h0"] = c.h0;
      row["h1"] = c.h1;
      row["chi"] = c.chi;
      coh.push_back(row);
    }
    doc["cohomology"] = coh;
    Json sm;
    sm["h1_O_equals_1"] = a.smoothing->h1_O_equals_1;
    sm["h1_O1_vanishes"] = a.smoothing->h1_O1_vanishes;
    sm["nodal"] = a.smoothing->nodal;
    doc["smoothing_hypotheses"] = sm;
  }
  return doc;
}

void render_analysis(const LineConfig& config, const ConfigAnalysis& a, Fields& fields,
                     std::ostream& out) {
  fields.add("vertices", std::to_string(config.num_vertices()));
  fields.add("generators", std::to_string(config.generators().size()));
  fields.add("degree", std::to_string(a.report.degree));
  fields.add("h0", std::to_string(a.report.h0));
  fields.add("h1", std::to_string(a.report.h1));
  fields.add("edge_transitive", yes_no(a.report.edge_transitive));
  fields.add("vertex_single_orbit", yes_no(a.report.vertex_single_orbit));
  fields.add("is_pgon", yes_no(a.pgon));
  if (a.embedded) {
    fields.add("embedding", a.embedding_kind + " in P^" +
                                std::to_string(a.embedded->ambient_dim() - 1));
    fields.add("spans", yes_no(a.embedded->spans()));
    fields.add("h1(O)=1", yes_no(a.smoothing->h1_O_equals_1));
    fields.add("h1(O(1))=0", yes_no(a.smoothing->h1_O1_vanishes));
    fields.add("nodal", yes_no(a.smoothing->nodal));
  }
  fields.render(out);
  if (a.embedded && !a.cohomology.empty()) {
    out << '\n';
    Table table({"m", "h0", "h1", "chi"});
    for (const CohomReport& c : a.cohomology) {
      table.add({std::to_string(c.m), std::to_string(c.h0), std::to_string(c.h1),
                 std::to_string(c.chi)});
    }
    table.render(out);
  }
}

LineConfig build_family(const std::string& name, std::optional<int> size) {
  if (name == "disjoint-lines") return disjoint_lines();
  if (!size) throw DomainError("family " + name + " needs a size");
  if (name == "ngon") return ngon(*size);
  if (name == "cube") return cube(*size);
  if (name == "complete") return complete(*size);
  throw DomainError("unknown family " + name);
}

int run_family(const Query& q, std::ostream& out) {
  const LineConfig config = build_family(*q.family_name, q.family_size);
  const bool embed = q.embed.has_value() || !q.twists.empty() || q.ambient_dim.has_value();
  std::optional<EmbeddedConfig> embedded;
  if (embed) {
    const int d = q.ambient_dim.value_or(std::max(3, config.num_vertices()));
    embedded.emplace(standard_embedding(config, d));
  }
  if (q.emit_config) {
    out << write_config(config, embedded ? &*embedded : nullptr);
    return kOk;
  }
  const ConfigAnalysis a = analyze(config, std::move(embedded), "standard", q.twists);
  if (q.format == OutputFormat::kJson) {
    Json doc = header_json(q.command);
    Json fam;
    fam["name"] = *q.family_name;
    fam["size"] = q.family_size ? Json(*q.family_size) : Json(nullptr);
    doc["family"] = fam;
    doc.update(analysis_json(config, a));
    emit_json(doc, out);
    return kOk;
  }
  Fields fields;
  fields.add("family", *q.family_name +
                           (q.family_size ? " " + std::to_string(*q.family_size) : ""));
  render_analysis(config, a, fields, out);
  return kOk;
}

// Prefixes ingestion diagnostics with the file name.
ConfigFile load_named_config(const std::filesystem::path& path) {
  const std::string name = path.generic_string();
  try {
    return load_config(path);
  } catch (const ParseError& e) {
    throw ParseError(name + ": " + e.what());
  } catch (const InvariantError& e) {
    throw InvariantError(name + ": " + e.what());
  }
}

int run_config(const Query& q, std::ostream& out) {
  ConfigFile file = load_named_config(*q.config_path);
  std::optional<EmbeddedConfig> embedded = std::move(file.embedded);
  std::string kind = "explicit";
  std::vector<std::int64_t> twists = q.twists;
  if (q.command == Command::kCohomology) {
    if (!embedded) {
      embedded.emplace(standard_embedding(file.config, std::max(3, file.config.num_vertices())));
      kind = "standard";
    }
    if (twists.empty()) twists = {0, 1};
  }
  const ConfigAnalysis a = analyze(file.config, std::move(embedded), kind, twists);
  if (q.format == OutputFormat::kJson) {
    Json doc = header_json(q.command);
    doc["config"] = q.config_path->generic_string();
    doc["valid"] = true;
    doc.update(analysis_json(file.config, a));
    emit_json(doc, out);
    return kOk;
  }
  Fields fields;
  fields.add("config", q.config_path->generic_string());
  fields.add("valid", "yes");
  render_analysis(file.config, a, fields, out);
  return kOk;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::kFeasible, Command::kClassify, Command::kFamily,
                    Command::kCohomology, Command::kCheckConfig}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "json") return OutputFormat::kJson;
  return std::nullopt;
}

std::vector<std::int64_t> parse_twists(std::string_view text) {
  std::vector<std::int64_t> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw ParseError("malformed twist '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::optional<std::string> validate(const Query& q) {
  switch (q.command) {
    case Command::kFeasible:
    case Command::kClassify:
      if (!q.algebra) return "missing algebra (--degree, --index, --exponent)";
      if (!q.poly) return "missing --poly";
      return std::nullopt;
    case Command::kFamily:
      if (!q.family_name) return "missing family name";
      if (*q.family_name != "ngon" && *q.family_name != "cube" &&
          *q.family_name != "complete" && *q.family_name != "disjoint-lines") {
        return "unknown family '" + *q.family_name +
               "' (expected ngon, cube, complete or disjoint-lines)";
      }
      if (*q.family_name != "disjoint-lines" && !q.family_size) {
        return "family " + *q.family_name + " needs a size";
      }
      if (q.embed && *q.embed != "standard") {
        return "unknown embedding '" + *q.embed + "' (expected standard)";
      }
      return std::nullopt;
    case Command::kCohomology:
    case Command::kCheckConfig:
      if (!q.config_path) return "missing configuration file path";
      return std::nullopt;
  }
  return "unknown command";
}

int run(const Query& query, std::ostream& out, std::ostream& err) {
  if (auto problem = validate(query)) {
    err << "error: " << *problem << '\n';
    return kUsage;
  }
  // Render into a buffer so a failure part-way leaves `out` untouched.
  std::ostringstream buffer;
  int status = kOk;
  try {
    switch (query.command) {
      case Command::kFeasible: status = run_feasible(query, buffer); break;
      case Command::kClassify: status = run_classify(query, buffer); break;
      case Command::kFamily: status = run_family(query, buffer); break;
      case Command::kCohomology:
      case Command::kCheckConfig: status = run_config(query, buffer); break;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const PreconditionError& e) {
    err << "hypotheses not met: " << e.what() << '\n';
    return kPrecondition;
  } catch (const DomainError& e) {
    err << "hypotheses not met: " << e.what() << '\n';
    return kPrecondition;
  }
  out << buffer.str();
  return status;
}

}  // namespace sbhilb::cli
