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

#include "fp4r/encoding.h"

#include <map>

#include "fp4r/sugar.h"
#include "fp4r/syntax.h"
#include "json.hpp"

namespace fp4r {

namespace {

using nlohmann::json;

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw P4InfoError(where + ": missing '" + key + "'");
  }
  return obj.at(key);
}

std::string get_string(const json& obj, const char* key,
                       const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_string()) throw P4InfoError(where + ": '" + key + "' is not a string");
  return v.get<std::string>();
}

// Protobuf JSON prints 64-bit integers as strings.
std::uint64_t get_id(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
      try {
        return std::stoull(s);
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw P4InfoError(where + ": bad id");
}

const json& array_or_empty(const json& obj, const char* key) {
  static const json kEmpty = json::array();
  if (!obj.contains(key)) return kEmpty;
  return obj.at(key);
}

void require_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw P4InfoError(where + " is not an array");
}

TypePtr wildcard() { return string_singleton("*"); }

}  // namespace

P4InfoDoc parse_p4info(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw P4InfoError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw P4InfoError("P4Info document is not an object");
  P4InfoDoc doc;
  const json& tables = array_or_empty(root, "tables");
  require_array(tables, "tables");
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const json& t = tables[i];
    std::string where = "tables[" + std::to_string(i) + "]";
    const json& pre = member(t, "preamble", where);
    P4InfoTable table;
    table.name = get_string(pre, "name", where + ".preamble");
    if (pre.contains("id")) table.id = get_id(pre.at("id"), where + ".preamble");
    const json& mfs = array_or_empty(t, "matchFields");
    require_array(mfs, where + ".matchFields");
    for (std::size_t j = 0; j < mfs.size(); ++j) {
      std::string w = where + ".matchFields[" + std::to_string(j) + "]";
      P4InfoMatchField mf;
      mf.name = get_string(mfs[j], "name", w);
      mf.match_type = get_string(mfs[j], "matchType", w);
      if (mfs[j].contains("bitwidth")) {
        mf.bitwidth = static_cast<int>(get_id(mfs[j].at("bitwidth"), w));
      }
      table.match_fields.push_back(std::move(mf));
    }
    const json& refs = array_or_empty(t, "actionRefs");
    require_array(refs, where + ".actionRefs");
    for (std::size_t j = 0; j < refs.size(); ++j) {
      std::string w = where + ".actionRefs[" + std::to_string(j) + "]";
      table.action_refs.push_back(get_id(member(refs[j], "id", w), w));
    }
    doc.tables.push_back(std::move(table));
  }
  const json& actions = array_or_empty(root, "actions");
  require_array(actions, "actions");
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const json& a = actions[i];
    std::string where = "actions[" + std::to_string(i) + "]";
    const json& pre = member(a, "preamble", where);
    P4InfoAction action;
    action.name = get_string(pre, "name", where + ".preamble");
    action.id = get_id(member(pre, "id", where + ".preamble"), where + ".preamble");
    const json& params = array_or_empty(a, "params");
    require_array(params, where + ".params");
    for (std::size_t j = 0; j < params.size(); ++j) {
      std::string w = where + ".params[" + std::to_string(j) + "]";
      ParamDef p;
      p.name = get_string(params[j], "name", w);
      p.bitwidth = static_cast<int>(get_id(member(params[j], "bitwidth", w), w));
      action.params.push_back(std::move(p));
    }
    doc.actions.push_back(std::move(action));
  }
  return doc;
}

ServerConfig to_config(const P4InfoDoc& doc, bool action_wildcard) {
  ServerConfig c;
  c.action_wildcard = action_wildcard;
  std::map<std::uint64_t, std::string> by_id;
  for (const auto& a : doc.actions) {
    if (!by_id.emplace(a.id, a.name).second) {
      throw P4InfoError("duplicate action id " + std::to_string(a.id));
    }
    c.actions.push_back({a.name, a.params});
  }
  for (const auto& t : doc.tables) {
    TableDef td;
    td.name = t.name;
    for (const auto& mf : t.match_fields) {
      auto kind = parse_match_kind(mf.match_type);
      if (!kind) {
        throw P4InfoError("table '" + t.name + "': unknown match type '" +
                          mf.match_type + "'");
      }
      td.match_fields.push_back({mf.name, *kind});
    }
    for (auto id : t.action_refs) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        throw P4InfoError("table '" + t.name + "' references unknown action id " +
                          std::to_string(id));
      }
      td.actions.push_back(it->second);
    }
    c.tables.push_back(std::move(td));
  }
  validate_config(c);
  return c;
}

TypePtr encode_match_kind(MatchKind kind) {
  switch (kind) {
    case MatchKind::kExact:
      return record_type({{"value", bytes_type()}});
    case MatchKind::kTernary:
      return sugar::option(
          record_type({{"value", bytes_type()}, {"mask", bytes_type()}}));
    case MatchKind::kLpm:
      return sugar::option(
          record_type({{"value", bytes_type()}, {"prefixLen", int_type()}}));
    case MatchKind::kRange:
      return sugar::option(
          record_type({{"low", bytes_type()}, {"high", bytes_type()}}));
    case MatchKind::kOptional:
      return sugar::option(record_type({{"value", bytes_type()}}));
  }
  return nullptr;
}

EncodedTypes encode_config(const ServerConfig& config) {
  std::vector<MatchTypeCase> tm, ta, tp;
  for (const auto& t : config.tables) {
    std::vector<TypeField> fields;
    for (const auto& mf : t.match_fields) {
      fields.push_back({mf.name, encode_match_kind(mf.kind)});
    }
    tm.push_back({string_singleton(t.name),
                  union_type(record_type(std::move(fields)), wildcard())});
    std::vector<TypePtr> acts;
    for (const auto& a : t.actions) acts.push_back(string_singleton(a));
    if (config.action_wildcard) acts.push_back(wildcard());
    if (!acts.empty()) ta.push_back({string_singleton(t.name), union_of(acts)});
  }
  for (const auto& a : config.actions) {
    TypePtr body = unit_type();
    if (!a.params.empty()) {
      std::vector<TypeField> fields;
      for (const auto& p : a.params) fields.push_back({p.name, bytes_type()});
      body = record_type(std::move(fields));
    }
    tp.push_back({string_singleton(a.name), body});
  }
  tm.push_back({wildcard(), wildcard()});
  ta.push_back({wildcard(), wildcard()});
  tp.push_back({wildcard(), unit_type()});
  return {forall_type("T", top_type(), match_type(type_var("T"), std::move(tm))),
          forall_type("T", top_type(), match_type(type_var("T"), std::move(ta))),
          forall_type("A", top_type(), match_type(type_var("A"), std::move(tp)))};
}

GroundValue server_address(const std::string& name, const ServerConfig& config) {
  EncodedTypes enc = encode_config(config);
  return GroundValue::address(name, enc.matches, enc.actions, enc.params);
}

namespace {

std::string emit_lookup(const std::string& name, const TypePtr& t) {
  const auto* f = t->as<types::Forall>();
  const auto* m = f->body->as<types::Match>();
  std::string out = "type " + name + " =\n  forall " + f->var + ". " + f->var +
                    " match {\n";
  for (std::size_t i = 0; i < m->cases.size(); ++i) {
    out += "    " + print_type(m->cases[i].pattern) + " => " +
           print_type(m->cases[i].continuation);
    out += i + 1 < m->cases.size() ? ",\n" : "\n";
  }
  return out + "  };\n";
}

}  // namespace

std::string emit_type_decls(const ServerConfig& config, const std::string& prefix) {
  EncodedTypes enc = encode_config(config);
  const std::string tm = prefix + "TableMatches";
  const std::string ta = prefix + "TableActions";
  const std::string tp = prefix + "ActionParams";
  std::string out;
  out += emit_lookup(tm, enc.matches) + "\n";
  out += emit_lookup(ta, enc.actions) + "\n";
  out += emit_lookup(tp, enc.params) + "\n";
  out += "type " + prefix + "Server = ServerRef[" + tm + ", " + ta + ", " +
         tp + "];\n";
  out += "type " + prefix + "Channel = Chan[" + tm + ", " + ta + ", " + tp + "];\n";
  return out;
}

std::vector<std::string> lint_entity(const ServerConfig& config,
                                     const Entity& entity) {
  std::vector<std::string> out;
  const ActionDef* a = config.find_action(entity.action_name);
  if (!a || !entity.params.is<GroundValue::Record>()) return out;
  for (const auto& p : a->params) {
    const GroundValue* v = entity.params.field(p.name);
    if (!v) continue;
    const auto* b = v->get_if<GroundValue::Bytes>();
    if (!b) continue;
    std::size_t limit = (static_cast<std::size_t>(p.bitwidth) + 7) / 8;
    if (b->octets.size() > limit) {
      out.push_back("argument '" + p.name + "' of action '" + a->name + "' has " +
                    std::to_string(b->octets.size()) + " bytes but the parameter is " +
                    std::to_string(p.bitwidth) + " bits wide");
    }
  }
  return out;
}

}  // namespace fp4r
