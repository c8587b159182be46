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

#ifndef FP4R_SERVER_H_
#define FP4R_SERVER_H_

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fp4r/ground_value.h"
#include "fp4r/term.h"

namespace fp4r {

enum class MatchKind { kExact, kTernary, kLpm, kRange, kOptional };

const char* match_kind_name(MatchKind kind);
// Case-insensitive: "lpm", "LPM", "Exact", ...
std::optional<MatchKind> parse_match_kind(std::string_view text);

struct MatchFieldDef {
  std::string name;
  MatchKind kind = MatchKind::kExact;
  bool operator==(const MatchFieldDef&) const = default;
};

struct TableDef {
  std::string name;
  std::vector<MatchFieldDef> match_fields;
  std::vector<std::string> actions;
  bool operator==(const TableDef&) const = default;
};

struct ParamDef {
  std::string name;
  int bitwidth = 0;
  bool operator==(const ParamDef&) const = default;
};

struct ActionDef {
  std::string name;
  std::vector<ParamDef> params;
  bool operator==(const ActionDef&) const = default;
};

// Tables and actions in document order.
struct ServerConfig {
  std::vector<TableDef> tables;
  std::vector<ActionDef> actions;
  // Accept "*" as the action of an entity naming a concrete table. Needed by
  // queries such as {"t", "*", "*", ()}.
  bool action_wildcard = true;

  const TableDef* find_table(std::string_view name) const;
  const ActionDef* find_action(std::string_view name) const;
  bool operator==(const ServerConfig&) const = default;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ConfigError on empty, duplicate or reserved names and on actions
// that tables reference but do not declare.
void validate_config(const ServerConfig& config);

struct Entity {
  std::string table_name;
  GroundValue matches;
  std::string action_name;
  GroundValue params;
  std::optional<GroundValue> priority;  // absent means "*"

  // {name = .., matches = .., action = .., params = ..[, priority = ..]}
  GroundValue to_value() const;
  // Null if `v` is not a record with string `name` and `action` fields and
  // `matches` and `params` fields.
  static std::optional<Entity> from_value(const GroundValue& v);

  bool operator==(const Entity& other) const;
};

bool conforms(const GroundValue& entity, const ServerConfig& config);
bool conforms(const Entity& entity, const ServerConfig& config);

std::vector<Entity> eval_read(const ServerConfig& config,
                              const std::vector<Entity>& entities,
                              const Entity& query);

class WildcardInWrite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WriteKind { kInsert, kModify, kDelete };

std::pair<std::vector<Entity>, bool> eval_write(
    const ServerConfig& config, const std::vector<Entity>& entities,
    WriteKind kind, const Entity& entity);

struct ServerState {
  ServerConfig config;
  std::vector<Entity> entities;
  GroundValue address;  // an Address value carrying the encoded types
  std::set<std::string> channels;
  std::uint64_t next_channel = 1;
};

bool server_well_formed(const ServerState& state);

struct ServerReply {
  GroundValue result;
  ServerState next;
};

struct Refusal {
  enum class Reason { kWrongAddress, kUnknownChannel, kNonconformant, kMalformed };
  Reason reason;
  std::string message;
};

const char* refusal_reason_name(Refusal::Reason reason);

// One server transition. `target` is the address (Connect) or a channel;
// `payload` the entity value for the other operations.
std::variant<ServerReply, Refusal> server_step(
    const ServerState& state, OpKind op, const GroundValue& target,
    const std::optional<GroundValue>& payload);

}  // namespace fp4r

#endif  // FP4R_SERVER_H_
