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

// Reader and writer for the line-configuration text format documented in
// docs/config-format.md:
//
//   # pentagon in P^4
//   [vertices]
//   a : 1, 0, 0, 0, 0
//   b : 0, 1, 0, 0, 0
//   ...
//   [edges]
//   a b
//   ...
//   [generators]
//   (a b c d e)
//
// Syntax problems raise ParseError; well-formed files describing an invalid
// configuration raise InvariantError.

#ifndef SBHILB_CONFIG_IO_H_
#define SBHILB_CONFIG_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "sbhilb/cohomology.h"
#include "sbhilb/lineconfig.h"

namespace sbhilb {

struct ConfigFile {
  LineConfig config;
  // Present when the [vertices] section carries coordinates.
  std::optional<EmbeddedConfig> embedded;
};

ConfigFile parse_config(std::string_view text);
// ParseError when the file cannot be read.
ConfigFile load_config(const std::filesystem::path& path);

// Serializes a configuration, with coordinates when `embedded` is given.
std::string write_config(const LineConfig& config,
                         const EmbeddedConfig* embedded = nullptr);

}  // namespace sbhilb

#endif  // SBHILB_CONFIG_IO_H_
