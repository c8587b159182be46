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

#include "fp4r/server.h"

#include <algorithm>
#include <cctype>

namespace fp4r {

const char* match_kind_name(MatchKind kind) {
  switch (kind) {
    case MatchKind::kExact:
      return "EXACT";
    case MatchKind::kTernary:
      return "TERNARY";
    case MatchKind::kLpm:
      return "LPM";
    case MatchKind::kRange:
      return "RANGE";
    case MatchKind::kOptional:
      return "OPTIONAL";
  }
  return "?";
}

std::optional<MatchKind> parse_match_kind(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (MatchKind k : {MatchKind::kExact, MatchKind::kTernary, MatchKind::kLpm,
                      MatchKind::kRange, MatchKind::kOptional}) {
    if (upper == match_kind_name(k)) return k;
  }
  return std::nullopt;
}

const TableDef* ServerConfig::find_table(std::string_view name) const {
  for (const auto& t : tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const ActionDef* ServerConfig::find_action(std::string_view name) const {
  for (const auto& a : actions) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

void validate_config(const ServerConfig& config) {
  std::set<std::string> names;
  auto check_name = [&](const std::string& kind, const std::string& name) {
    if (name.empty()) throw ConfigError(kind + " with an empty name");
    if (name == "*") throw ConfigError(kind + " named \"*\"");
    if (!names.insert(kind + ":" + name).second) {
      throw ConfigError("duplicate " + kind + " '" + name + "'");
    }
  };
  for (const auto& a : config.actions) {
    check_name("action", a.name);
    std::set<std::string> params;
    for (const auto& p : a.params) {
      if (p.name.empty() || !params.insert(p.name).second) {
        throw ConfigError("bad or duplicate parameter in action '" + a.name +
                          "'");
      }
      if (p.bitwidth <= 0) {
        throw ConfigError("parameter '" + p.name + "' of action '" + a.name +
                          "' has a non-positive bitwidth");
      }
    }
  }
  for (const auto& t : config.tables) {
    check_name("table", t.name);
    std::set<std::string> fields;
    for (const auto& f : t.match_fields) {
      if (f.name.empty() || !fields.insert(f.name).second) {
        throw ConfigError("bad or duplicate match field in table '" + t.name +
                          "'");
      }
    }
    for (const auto& a : t.actions) {
      if (!config.find_action(a)) {
        throw ConfigError("table '" + t.name + "' references undeclared action '" +
                          a + "'");
      }
    }
  }
}

GroundValue Entity::to_value() const {
  std::vector<std::pair<std::string, GroundValue>> fields = {
      {"name", GroundValue::string(table_name)},
      {"matches", matches},
      {"action", GroundValue::string(action_name)},
      {"params", params},
  };
  if (priority) fields.emplace_back("priority", *priority);
  return GroundValue::record(std::move(fields));
}

std::optional<Entity> Entity::from_value(const GroundValue& v) {
  if (!v.is<GroundValue::Record>()) return std::nullopt;
  const GroundValue* name = v.field("name");
  const GroundValue* matches = v.field("matches");
  const GroundValue* action = v.field("action");
  const GroundValue* params = v.field("params");
  if (!name || !matches || !action || !params) return std::nullopt;
  if (!name->is<GroundValue::Str>() || !action->is<GroundValue::Str>()) {
    return std::nullopt;
  }
  Entity e;
  e.table_name = name->get_if<GroundValue::Str>()->value;
  e.matches = *matches;
  e.action_name = action->get_if<GroundValue::Str>()->value;
  e.params = *params;
  if (const GroundValue* p = v.field("priority")) e.priority = *p;
  return e;
}

bool Entity::operator==(const Entity& other) const {
  return table_name == other.table_name && matches == other.matches &&
         action_name == other.action_name && params == other.params &&
         priority == other.priority;
}

namespace {

bool is_wild(const GroundValue& v) { return v.is_string("*"); }

// Membership in a record type: the listed fields must be present and
// satisfy `ok`; other fields are ignored.
template <typename Pred>
bool has_fields(const GroundValue& v, std::initializer_list<const char*> labels,
                Pred ok) {
  if (!v.is<GroundValue::Record>()) return false;
  for (const char* l : labels) {
    const GroundValue* f = v.field(l);
    if (!f || !ok(l, *f)) return false;
  }
  return true;
}

bool bytes_fields(const GroundValue& v, std::initializer_list<const char*> labels) {
  return has_fields(v, labels, [](const char*, const GroundValue& f) {
    return f.is<GroundValue::Bytes>();
  });
}

// v ∈ {some: T} | {none: Unit}
template <typename Pred>
bool option_of(const GroundValue& v, Pred ok) {
  if (!v.is<GroundValue::Record>()) return false;
  if (const GroundValue* s = v.field("some"); s && ok(*s)) return true;
  const GroundValue* n = v.field("none");
  return n != nullptr && n->is<GroundValue::Unit>();
}

bool match_value_ok(MatchKind kind, const GroundValue& v) {
  switch (kind) {
    case MatchKind::kExact:
      return bytes_fields(v, {"value"});
    case MatchKind::kTernary:
      return option_of(v, [](const GroundValue& x) {
        return bytes_fields(x, {"value", "mask"});
      });
    case MatchKind::kLpm:
      return option_of(v, [](const GroundValue& x) {
        return has_fields(x, {"value", "prefixLen"},
                          [](const char* l, const GroundValue& f) {
                            return std::string_view(l) == "value"
                                       ? f.is<GroundValue::Bytes>()
                                       : f.is<GroundValue::Int>();
                          });
      });
    case MatchKind::kRange:
      return option_of(v, [](const GroundValue& x) {
        return bytes_fields(x, {"low", "high"});
      });
    case MatchKind::kOptional:
      return option_of(v, [](const GroundValue& x) {
        return bytes_fields(x, {"value"});
      });
  }
  return false;
}

bool matches_ok(const TableDef& t, const GroundValue& m) {
  if (is_wild(m)) return true;
  if (!m.is<GroundValue::Record>()) return false;
  for (const auto& f : t.match_fields) {
    const GroundValue* v = m.field(f.name);
    if (!v || !match_value_ok(f.kind, *v)) return false;
  }
  return true;
}

bool params_ok(const ActionDef& a, const GroundValue& p) {
  if (a.params.empty()) return p.is<GroundValue::Unit>();
  if (!p.is<GroundValue::Record>()) return false;
  for (const auto& d : a.params) {
    const GroundValue* v = p.field(d.name);
    if (!v || !v->is<GroundValue::Bytes>()) return false;
  }
  return true;
}

bool priority_matches(const Entity& e, const Entity& q) {
  if (!q.priority || is_wild(*q.priority)) return true;
  return e.priority == q.priority;
}

bool same_key(const Entity& a, const Entity& b) {
  return a.table_name == b.table_name && a.matches == b.matches &&
         a.priority == b.priority;
}

}  // namespace

bool conforms(const Entity& e, const ServerConfig& config) {
  if (e.table_name == "*") {
    return is_wild(e.matches) && e.action_name == "*" &&
           e.params.is<GroundValue::Unit>();
  }
  const TableDef* t = config.find_table(e.table_name);
  if (!t || !matches_ok(*t, e.matches)) return false;
  if (e.action_name == "*") {
    return config.action_wildcard && e.params.is<GroundValue::Unit>();
  }
  if (std::find(t->actions.begin(), t->actions.end(), e.action_name) ==
      t->actions.end()) {
    return false;
  }
  const ActionDef* a = config.find_action(e.action_name);
  return a != nullptr && params_ok(*a, e.params);
}

bool conforms(const GroundValue& entity, const ServerConfig& config) {
  auto e = Entity::from_value(entity);
  return e.has_value() && conforms(*e, config);
}

std::vector<Entity> eval_read(const ServerConfig&,
                              const std::vector<Entity>& entities,
                              const Entity& query) {
  if (query.table_name == "*") return entities;
  std::vector<Entity> out;
  for (const auto& e : entities) {
    if (e.table_name == query.table_name) out.push_back(e);
  }
  if (!is_wild(query.matches)) {
    std::erase_if(out, [&](const Entity& e) { return e.matches != query.matches; });
  }
  if (query.action_name != "*") {
    std::erase_if(out, [&](const Entity& e) {
      return e.action_name != query.action_name;
    });
  }
  std::erase_if(out, [&](const Entity& e) { return !priority_matches(e, query); });
  return out;
}

std::pair<std::vector<Entity>, bool> eval_write(
    const ServerConfig&, const std::vector<Entity>& entities, WriteKind kind,
    const Entity& entity) {
  if (entity.table_name == "*") {
    throw WildcardInWrite("write with a wildcard table name");
  }
  if (kind != WriteKind::kDelete &&
      (is_wild(entity.matches) || entity.action_name == "*")) {
    throw WildcardInWrite("insert or modify with wildcard matches or action");
  }
  if (entity.priority && is_wild(*entity.priority) && kind != WriteKind::kDelete) {
    throw WildcardInWrite("insert or modify with a wildcard priority");
  }
  std::vector<Entity> out = entities;
  switch (kind) {
    case WriteKind::kInsert: {
      bool present = std::any_of(out.begin(), out.end(), [&](const Entity& e) {
        return same_key(e, entity);
      });
      if (present) return {std::move(out), false};
      out.push_back(entity);
      return {std::move(out), true};
    }
    case WriteKind::kModify:
      for (auto& e : out) {
        if (same_key(e, entity)) {
          e.action_name = entity.action_name;
          e.params = entity.params;
          return {std::move(out), true};
        }
      }
      return {std::move(out), false};
    case WriteKind::kDelete: {
      auto n = std::erase_if(out, [&](const Entity& e) {
        return e.table_name == entity.table_name &&
               (is_wild(entity.matches) || e.matches == entity.matches) &&
               priority_matches(e, entity);
      });
      return {std::move(out), n > 0};
    }
  }
  return {std::move(out), false};
}

bool server_well_formed(const ServerState& state) {
  return std::all_of(state.entities.begin(), state.entities.end(),
                     [&](const Entity& e) { return conforms(e, state.config); });
}

const char* refusal_reason_name(Refusal::Reason reason) {
  switch (reason) {
    case Refusal::Reason::kWrongAddress:
      return "wrong-address";
    case Refusal::Reason::kUnknownChannel:
      return "unknown-channel";
    case Refusal::Reason::kNonconformant:
      return "nonconformant";
    case Refusal::Reason::kMalformed:
      return "malformed";
  }
  return "?";
}

std::variant<ServerReply, Refusal> server_step(
    const ServerState& state, OpKind op, const GroundValue& target,
    const std::optional<GroundValue>& payload) {
  const auto* addr = state.address.get_if<GroundValue::Address>();
  if (!addr) {
    return Refusal{Refusal::Reason::kMalformed, "server has no address"};
  }
  if (op == OpKind::kConnect) {
    if (target != state.address) {
      return Refusal{Refusal::Reason::kWrongAddress,
                     "connect to an address this server does not own"};
    }
    ServerState next = state;
    std::string id = addr->name + "#" + std::to_string(next.next_channel++);
    next.channels.insert(id);
    return ServerReply{
        GroundValue::channel(id, addr->matches, addr->actions, addr->params),
        std::move(next)};
  }
  const auto* ch = target.get_if<GroundValue::Channel>();
  if (!ch || !state.channels.count(ch->id)) {
    return Refusal{Refusal::Reason::kUnknownChannel, "unknown channel"};
  }
  if (!payload) {
    return Refusal{Refusal::Reason::kMalformed, "missing entity argument"};
  }
  auto entity = Entity::from_value(*payload);
  if (!entity || !conforms(*entity, state.config)) {
    return Refusal{Refusal::Reason::kNonconformant,
                   "entity does not conform to the server configuration"};
  }
  if (op == OpKind::kRead) {
    std::vector<GroundValue> items;
    for (const auto& e : eval_read(state.config, state.entities, *entity)) {
      items.push_back(e.to_value());
    }
    return ServerReply{GroundValue::list(std::move(items)), state};
  }
  WriteKind kind = op == OpKind::kInsert   ? WriteKind::kInsert
                   : op == OpKind::kModify ? WriteKind::kModify
                                           : WriteKind::kDelete;
  ServerState next = state;
  bool changed = false;
  try {
    std::tie(next.entities, changed) =
        eval_write(state.config, state.entities, kind, *entity);
  } catch (const WildcardInWrite&) {
    changed = false;
  }
  return ServerReply{GroundValue::boolean(changed), std::move(next)};
}

}  // namespace fp4r
