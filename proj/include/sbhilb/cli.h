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

#ifndef SBHILB_CLI_H_
#define SBHILB_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbhilb/numpoly.h"

namespace sbhilb::cli {

inline constexpr int kSchemaVersion = 1;
// Environment variable that replaces the default output format.
inline constexpr const char* kFormatEnvVar = "SBHILB_FORMAT";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kParse = 3,
  kInvariant = 4,
  kPrecondition = 5,
};

enum class Command { kFeasible, kClassify, kFamily, kCohomology, kCheckConfig };
enum class OutputFormat { kTable, kJson };

struct AlgebraSpec {
  std::int64_t degree = 0;
  std::int64_t index = 0;
  std::int64_t exponent = 0;
  bool division = false;
};

struct Query {
  Command command = Command::kFeasible;
  std::optional<AlgebraSpec> algebra;
  std::optional<NumPoly> poly;
  // ngon, cube, complete, disjoint-lines
  std::optional<std::string> family_name;
  std::optional<int> family_size;
  // Only "standard" is recognized.
  std::optional<std::string> embed;
  std::optional<int> ambient_dim;
  std::vector<std::int64_t> twists;
  std::optional<std::filesystem::path> config_path;
  bool emit_config = false;
  OutputFormat format = OutputFormat::kTable;
};

// Checks that the fields `command` needs are present; returns a diagnostic
// naming the first missing one.
std::optional<std::string> validate(const Query& query);

// Dispatches the query, writing the rendered result to `out` and any
// diagnostic to `err`. Returns an ExitCode.
int run(const Query& query, std::ostream& out, std::ostream& err);

std::optional<Command> parse_command(std::string_view name);
std::optional<OutputFormat> parse_format(std::string_view name);
// Comma-separated nonnegative integers, e.g. "0,1,2".
std::vector<std::int64_t> parse_twists(std::string_view text);

}  // namespace sbhilb::cli

#endif  // SBHILB_CLI_H_
