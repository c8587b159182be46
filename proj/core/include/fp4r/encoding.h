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

#ifndef FP4R_ENCODING_H_
#define FP4R_ENCODING_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fp4r/ground_value.h"
#include "fp4r/server.h"
#include "fp4r/type.h"

namespace fp4r {

struct P4InfoMatchField {
  std::string name;
  std::string match_type;
  int bitwidth = 0;  // 0 when absent
};

struct P4InfoTable {
  std::string name;
  std::uint64_t id = 0;
  std::vector<P4InfoMatchField> match_fields;
  std::vector<std::uint64_t> action_refs;
};

struct P4InfoAction {
  std::string name;
  std::uint64_t id = 0;
  std::vector<ParamDef> params;
};

// The subset of a P4Info document that describes tables and actions.
struct P4InfoDoc {
  std::vector<P4InfoTable> tables;
  std::vector<P4InfoAction> actions;
};

class P4InfoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Protobuf-JSON field names (`preamble`, `matchFields`, `actionRefs`,
// `params`). Ids may be numbers or decimal strings. Throws P4InfoError.
P4InfoDoc parse_p4info(std::string_view json_text);

// Resolves action ids and match types. Throws P4InfoError on dangling ids or
// unknown match types, and ConfigError on an invalid result.
ServerConfig to_config(const P4InfoDoc& doc, bool action_wildcard = true);

struct EncodedTypes {
  TypePtr matches;  // Tm
  TypePtr actions;  // Ta
  TypePtr params;   // Tp
};

TypePtr encode_match_kind(MatchKind kind);
EncodedTypes encode_config(const ServerConfig& config);

// The address value a server with this configuration listens on.
GroundValue server_address(const std::string& name, const ServerConfig& config);

// Declarations <P>TableMatches, <P>TableActions, <P>ActionParams,
// <P>Server (the ServerRef type) and <P>Channel (the Chan type), in surface
// syntax.
std::string emit_type_decls(const ServerConfig& config,
                            const std::string& prefix = "");

// Warnings for action arguments longer than their declared bitwidth.
std::vector<std::string> lint_entity(const ServerConfig& config,
                                     const Entity& entity);

}  // namespace fp4r

#endif  // FP4R_ENCODING_H_
