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

#include "sbhilb/config_io.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "sbhilb/errors.h"

namespace sbhilb {
namespace {

enum class Section { kNone, kVertices, kEdges, kGenerators };

std::string_view strip(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

class Reader {
 public:
  ConfigFile read(std::string_view text) {
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
      std::size_t end = text.find('\n', line_start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no_;
      handle_line(text.substr(line_start, end - line_start));
      line_start = end + 1;
    }
    return finish();
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + message);
  }

  void handle_line(std::string_view raw) {
    std::string_view line = raw.substr(0, raw.find('#'));
    line = strip(line);
    if (line.empty()) return;
    // Image lists always contain whitespace, section headers never do.
    const bool no_space = std::none_of(line.begin(), line.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    if (line.front() == '[' && line.back() == ']' && no_space) {
      open_section(line);
      return;
    }
    switch (section_) {
      case Section::kNone: fail("entry outside of any section");
      case Section::kVertices: vertex_line(line); break;
      case Section::kEdges: edge_line(line); break;
      case Section::kGenerators: generator_line(line); break;
    }
  }

  void open_section(std::string_view header) {
    Section next;
    if (header == "[vertices]") {
      next = Section::kVertices;
    } else if (header == "[edges]") {
      next = Section::kEdges;
    } else if (header == "[generators]") {
      next = Section::kGenerators;
    } else {
      fail("unknown section " + std::string(header));
    }
    if (seen_[static_cast<int>(next)]) fail("section " + std::string(header) + " repeated");
    if (next != Section::kVertices && !seen_[static_cast<int>(Section::kVertices)]) {
      fail("section " + std::string(header) + " must follow [vertices]");
    }
    seen_[static_cast<int>(next)] = true;
    section_ = next;
  }

  int vertex_id(std::string_view token) const {
    auto it = ids_.find(std::string(token));
    if (it == ids_.end()) fail("unknown vertex '" + std::string(token) + "'");
    return it->second;
  }

  void vertex_line(std::string_view line) {
    const std::size_t colon = line.find(':');
    const std::string_view id = strip(line.substr(0, colon));
    if (id.empty()) fail("missing vertex id");
    for (char c : id) {
      if (!is_id_char(c)) fail("vertex id '" + std::string(id) + "' has characters outside [A-Za-z0-9_]");
    }
    if (ids_.count(std::string(id))) fail("vertex '" + std::string(id) + "' declared twice");
    ids_.emplace(std::string(id), static_cast<int>(labels_.size()));
    labels_.emplace_back(id);

    const bool has_coords = colon != std::string_view::npos;
    if (labels_.size() == 1) {
      with_coords_ = has_coords;
    } else if (has_coords != with_coords_) {
      fail("either every vertex carries coordinates or none does");
    }
    if (!has_coords) return;

    std::vector<Rational> coords;
    std::string_view rest = line.substr(colon + 1);
    while (true) {
      const std::size_t comma = rest.find(',');
      const std::string_view token = strip(rest.substr(0, comma));
      if (token.empty()) fail("empty coordinate for vertex '" + std::string(id) + "'");
      try {
        coords.push_back(parse_rational(token));
      } catch (const ParseError& e) {
        fail(e.what());
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    coords_.push_back(std::move(coords));
  }

  void edge_line(std::string_view line) {
    const std::vector<std::string_view> tokens = split_ws(line);
    if (tokens.size() != 2) fail("an edge is two vertex ids separated by whitespace");
    edges_.push_back(Edge{vertex_id(tokens[0]), vertex_id(tokens[1])});
  }

  void generator_line(std::string_view line) {
    const int n = static_cast<int>(labels_.size());
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated image list");
      Permutation images;
      for (std::string_view token : split_ws(line.substr(1, line.size() - 2))) {
        images.push_back(vertex_id(token));
      }
      if (static_cast<int>(images.size()) != n) {
        fail("image list has " + std::to_string(images.size()) + " entries for " +
             std::to_string(n) + " vertices");
      }
      generators_.push_back(std::move(images));
      return;
    }

    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (line[i] != '(') fail("expected '(' or '[' in generator");
      const std::size_t close = line.find(')', i);
      if (close == std::string_view::npos) fail("unterminated cycle");
      std::vector<int> cycle;
      for (std::string_view token : split_ws(line.substr(i + 1, close - i - 1))) {
        if (token.find('(') != std::string_view::npos) fail("nested '(' in cycle");
        cycle.push_back(vertex_id(token));
      }
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      i = close + 1;
    }
    generators_.push_back(from_cycles(n, cycles));
  }

  ConfigFile finish() {
    if (labels_.empty()) {
      throw InvariantError("configuration declares no vertices");
    }
    const int n = static_cast<int>(labels_.size());
    LineConfig config = LineConfig::make(n, std::move(edges_), std::move(generators_),
                                         std::move(labels_));
    std::optional<EmbeddedConfig> embedded;
    if (with_coords_) {
      const int dim = static_cast<int>(coords_.front().size());
      embedded.emplace(EmbeddedConfig::make(config, dim, std::move(coords_)));
    }
    return ConfigFile{std::move(config), std::move(embedded)};
  }

  int line_no_ = 0;
  Section section_ = Section::kNone;
  bool seen_[4] = {false, false, false, false};
  bool with_coords_ = false;
  std::map<std::string, int> ids_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> coords_;
  std::vector<Edge> edges_;
  std::vector<Permutation> generators_;
};

}  // namespace

ConfigFile parse_config(std::string_view text) { return Reader().read(text); }

ConfigFile load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read configuration file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw ParseError("error while reading " + path.string());
  return parse_config(buffer.str());
}

std::string write_config(const LineConfig& config, const EmbeddedConfig* embedded) {
  const auto labels = config.labels();
  std::ostringstream out;
  out << "[vertices]\n";
  for (int v = 0; v < config.num_vertices(); ++v) {
    out << labels[v];
    if (embedded != nullptr) {
      out << " :";
      const auto& coords = embedded->coords()[v];
      for (std::size_t j = 0; j < coords.size(); ++j) {
        out << (j == 0 ? " " : ", ") << to_string(coords[j]);
      }
    }
    out << '\n';
  }
  out << "[edges]\n";
  for (const Edge& edge : config.edges()) {
    out << labels[edge.a] << ' ' << labels[edge.b] << '\n';
  }
  out << "[generators]\n";
  for (const Permutation& gen : config.generators()) {
    std::vector<bool> done(gen.size(), false);
    bool wrote = false;
    for (std::size_t start = 0; start < gen.size(); ++start) {
      if (done[start] || gen[start] == static_cast<int>(start)) continue;
      out << '(';
      std::size_t v = start;
      bool first = true;
      while (!done[v]) {
        done[v] = true;
        out << (first ? "" : " ") << labels[v];
        first = false;
        v = static_cast<std::size_t>(gen[v]);
      }
      out << ')';
      wrote = true;
    }
    if (!wrote) out << "()";
    out << '\n';
  }
  return out.str();
}

}  // namespace sbhilb
