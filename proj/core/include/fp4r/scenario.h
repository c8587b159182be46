// Copyright 2026 The fp4r Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FP4R_SCENARIO_H_
#define FP4R_SCENARIO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp4r/network.h"
#include "fp4r/server.h"
#include "fp4r/syntax.h"

namespace fp4r {

// Unreadable files and malformed scenario documents.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::filesystem::path& path);

// Throws ScenarioError, P4InfoError or ConfigError.
ServerConfig load_p4info_file(const std::filesystem::path& path,
                              bool action_wildcard = true);

// Parses emit_type_decls output for `config` into `aliases`.
void add_config_aliases(TypeAliases& aliases, const ServerConfig& config,
                        const std::string& prefix);

// Parses a `.fp4r` file with the given aliases in scope; its own
// declarations are added to them. Throws ScenarioError or ParseError.
Program load_program_file(const std::filesystem::path& path,
                          const TypeAliases& aliases);

struct Scenario {
  Network network;
  TypeAliases aliases;  // declarations visible to every client
};

// JSON document:
//   {"servers": [{"id", "p4info", "address", "prefix", "entities"}],
//    "clients": [{"id", "program", "decls": [..]}]}
// Relative paths resolve against the scenario file's directory. Each
// server's configuration contributes the declarations of emit_type_decls
// under its prefix (default empty). `entities` is a file path or an inline
// array.
Scenario load_scenario(const std::filesystem::path& path,
                       bool action_wildcard = true);

}  // namespace fp4r

#endif  // FP4R_SCENARIO_H_
