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

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sbhilb/cli.h"
#include "sbhilb/errors.h"

namespace {

using sbhilb::cli::Command;
using sbhilb::cli::ExitCode;
using sbhilb::cli::Query;

constexpr const char* kFooter = R"(commands:
  feasible      --degree D --index N --exponent M [--division] --poly R,S
  classify      same flags as feasible; fails unless the enumeration hypotheses hold
  family NAME [SIZE] [--embed standard] [--ambient D] [--cohomology LIST] [--emit-config]
                NAME is ngon, cube, complete or disjoint-lines
  cohomology FILE [--twist LIST]
  check-config FILE

exit status: 0 ok, 2 usage, 3 parse, 4 invariant violation, 5 hypotheses not met)";

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return ExitCode::kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical feasibility and line-configuration analysis on Severi-Brauer varieties",
               "sbhilb"};
  app.footer(kFooter);

  std::string command_name;
  std::vector<std::string> args;
  app.add_option("command", command_name, "feasible, classify, family, cohomology or check-config")
      ->required();
  app.add_option("args", args, "Family name and size, or a configuration file");

  std::int64_t degree = 0;
  std::int64_t index = 0;
  std::int64_t exponent = 0;
  bool division = false;
  std::string poly_text;
  std::string embed;
  int ambient = 0;
  std::string twist_text;
  std::string format_text;
  bool emit_config = false;
  auto* degree_opt = app.add_option("--degree", degree, "Degree d of the algebra");
  auto* index_opt = app.add_option("--index", index, "Index n");
  auto* exponent_opt = app.add_option("--exponent", exponent, "Exponent m");
  app.add_flag("--division", division, "The algebra is a division algebra");
  auto* poly_opt = app.add_option("--poly", poly_text, "Hilbert polynomial, e.g. 5,0 or 5t+1");
  auto* embed_opt = app.add_option("--embed", embed, "Embedding for family (standard)");
  auto* ambient_opt = app.add_option("--ambient", ambient, "Homogeneous coordinate count");
  auto* twist_opt = app.add_option("--cohomology,--twist", twist_text,
                                   "Comma-separated twists m");
  auto* format_opt = app.add_option("--format", format_text, "table or json");
  app.add_flag("--emit-config", emit_config, "Print the family as a configuration file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  Query query;
  const auto command = sbhilb::cli::parse_command(command_name);
  if (!command) return usage_error("unknown command '" + command_name + "'");
  query.command = *command;

  std::string format_source = format_text;
  if (format_opt->count() == 0) {
    if (const char* env = std::getenv(sbhilb::cli::kFormatEnvVar); env != nullptr && *env) {
      format_source = env;
    }
  }
  if (!format_source.empty()) {
    const auto format = sbhilb::cli::parse_format(format_source);
    if (!format) return usage_error("unknown format '" + format_source + "'");
    query.format = *format;
  }

  const std::size_t positional_limit =
      *command == Command::kFamily ? 2 : (*command == Command::kFeasible ||
                                          *command == Command::kClassify)
                                             ? 0
                                             : 1;
  if (args.size() > positional_limit) return usage_error("too many arguments");

  try {
    if (degree_opt->count() || index_opt->count() || exponent_opt->count() || division) {
      if (!degree_opt->count() || !index_opt->count() || !exponent_opt->count()) {
        return usage_error("--degree, --index and --exponent go together");
      }
      query.algebra = sbhilb::cli::AlgebraSpec{degree, index, exponent, division};
    }
    if (poly_opt->count()) query.poly = sbhilb::parse_numpoly(poly_text);
    if (twist_opt->count()) query.twists = sbhilb::cli::parse_twists(twist_text);
  } catch (const sbhilb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return ExitCode::kParse;
  }
  if (embed_opt->count()) query.embed = embed;
  if (ambient_opt->count()) query.ambient_dim = ambient;
  query.emit_config = emit_config;

  if (*command == Command::kFamily) {
    if (!args.empty()) query.family_name = args[0];
    if (args.size() > 1) {
      try {
        std::size_t used = 0;
        query.family_size = std::stoi(args[1], &used);
        if (used != args[1].size()) throw std::invalid_argument(args[1]);
      } catch (const std::exception&) {
        return usage_error("family size '" + args[1] + "' is not an integer");
      }
    }
  } else if (*command == Command::kCohomology || *command == Command::kCheckConfig) {
    if (!args.empty()) query.config_path = args[0];
  }

  return sbhilb::cli::run(query, std::cout, std::cerr);
}
