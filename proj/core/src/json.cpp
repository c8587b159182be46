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

#include "fp4r/json.h"

#include "fp4r/syntax.h"
#include "json.hpp"

namespace fp4r {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j, int indent) {
  return j.dump(indent < 0 ? -1 : indent);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonError(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const GroundValue& v) {
  return std::visit(
      [&](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, GroundValue::Unit>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, GroundValue::Int> ||
                             std::is_same_v<T, GroundValue::Bool> ||
                             std::is_same_v<T, GroundValue::Str>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, GroundValue::Bytes>) {
          Json arr = Json::array();
          for (auto b : n.octets) arr.push_back(b);
          return Json{{"$bytes", arr}};
        } else if constexpr (std::is_same_v<T, GroundValue::Address> ||
                             std::is_same_v<T, GroundValue::Channel>) {
          Json j;
          if constexpr (std::is_same_v<T, GroundValue::Address>) {
            j["$addr"] = n.name;
          } else {
            j["$chan"] = n.id;
          }
          j["matches"] = print_type(n.matches);
          j["actions"] = print_type(n.actions);
          j["params"] = print_type(n.params);
          return j;
        } else if constexpr (std::is_same_v<T, GroundValue::List>) {
          Json arr = Json::array();
          for (const auto& i : n.items) arr.push_back(to_json(i));
          return arr;
        } else {
          Json obj = Json::object();
          for (const auto& [k, f] : n.fields) obj[k] = to_json(f);
          return obj;
        }
      },
      v.node());
}

TypePtr type_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw JsonError(std::string("endpoint value without a '") + key + "' type");
  }
  try {
    return parse_type(j.at(key).get<std::string>());
  } catch (const ParseError& e) {
    throw JsonError(std::string("bad type in '") + key + "': " + e.what());
  }
}

GroundValue from_json(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return GroundValue::unit();
    case Json::value_t::boolean:
      return GroundValue::boolean(j.get<bool>());
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
      return GroundValue::integer(j.get<std::int64_t>());
    case Json::value_t::string:
      return GroundValue::string(j.get<std::string>());
    case Json::value_t::array: {
      std::vector<GroundValue> items;
      for (const auto& i : j) items.push_back(from_json(i));
      return GroundValue::list(std::move(items));
    }
    case Json::value_t::object: {
      if (j.contains("$bytes")) {
        std::vector<std::uint8_t> octets;
        for (const auto& b : j.at("$bytes")) {
          if (!b.is_number_integer() || b.get<int>() < 0 || b.get<int>() > 255) {
            throw JsonError("$bytes items must be integers in 0..255");
          }
          octets.push_back(static_cast<std::uint8_t>(b.get<int>()));
        }
        return GroundValue::bytes(std::move(octets));
      }
      if (j.contains("$addr")) {
        return GroundValue::address(j.at("$addr").get<std::string>(),
                                    type_field(j, "matches"),
                                    type_field(j, "actions"),
                                    type_field(j, "params"));
      }
      if (j.contains("$chan")) {
        return GroundValue::channel(j.at("$chan").get<std::string>(),
                                    type_field(j, "matches"),
                                    type_field(j, "actions"),
                                    type_field(j, "params"));
      }
      std::vector<std::pair<std::string, GroundValue>> fields;
      for (const auto& [k, f] : j.items()) fields.emplace_back(k, from_json(f));
      return GroundValue::record(std::move(fields));
    }
    default:
      throw JsonError("unsupported JSON value (floating point?)");
  }
}

Json type_json(const TypePtr& t) {
  return std::visit(
      [&](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        Json j;
        if constexpr (std::is_same_v<T, types::Top>) {
          j["kind"] = "top";
        } else if constexpr (std::is_same_v<T, types::Basic>) {
          j["kind"] = basic_kind_name(n.kind);
        } else if constexpr (std::is_same_v<T, types::ServerRef> ||
                             std::is_same_v<T, types::Chan>) {
          j["kind"] = std::is_same_v<T, types::ServerRef> ? "server_ref" : "chan";
          j["matches"] = type_json(n.matches);
          j["actions"] = type_json(n.actions);
          j["params"] = type_json(n.params);
        } else if constexpr (std::is_same_v<T, types::Record>) {
          j["kind"] = "record";
          Json fields = Json::array();
          for (const auto& f : n.fields) {
            fields.push_back({{"label", f.label}, {"type", type_json(f.type)}});
          }
          j["fields"] = fields;
        } else if constexpr (std::is_same_v<T, types::List>) {
          j["kind"] = "list";
          j["element"] = type_json(n.element);
        } else if constexpr (std::is_same_v<T, types::Arrow>) {
          j["kind"] = "arrow";
          j["from"] = type_json(n.from);
          j["to"] = type_json(n.to);
        } else if constexpr (std::is_same_v<T, types::Var>) {
          j["kind"] = "var";
          j["name"] = n.name;
        } else if constexpr (std::is_same_v<T, types::Forall>) {
          j["kind"] = "forall";
          j["var"] = n.var;
          j["bound"] = type_json(n.bound);
          j["body"] = type_json(n.body);
        } else if constexpr (std::is_same_v<T, types::App>) {
          j["kind"] = "app";
          j["fn"] = type_json(n.fn);
          j["arg"] = type_json(n.arg);
        } else if constexpr (std::is_same_v<T, types::Union>) {
          j["kind"] = "union";
          j["left"] = type_json(n.left);
          j["right"] = type_json(n.right);
        } else if constexpr (std::is_same_v<T, types::Singleton>) {
          j["kind"] = "singleton";
          j["value"] = to_json(n.value);
        } else {
          j["kind"] = "match";
          j["scrutinee"] = type_json(n.scrutinee);
          Json cases = Json::array();
          for (const auto& c : n.cases) {
            cases.push_back({{"pattern", type_json(c.pattern)},
                             {"continuation", type_json(c.continuation)}});
          }
          j["cases"] = cases;
        }
        return j;
      },
      t->node);
}

Json entities_json(const std::vector<Entity>& entities) {
  Json arr = Json::array();
  for (const auto& e : entities) arr.push_back(to_json(e.to_value()));
  return arr;
}

}  // namespace

std::string ground_to_json(const GroundValue& v, int indent) {
  return dump(to_json(v), indent);
}

GroundValue ground_from_json(std::string_view text) {
  return from_json(parse_json(text));
}

std::string entities_to_json(const std::vector<Entity>& entities, int indent) {
  return dump(entities_json(entities), indent);
}

std::vector<Entity> entities_from_json(std::string_view text) {
  Json j = parse_json(text);
  if (!j.is_array()) throw JsonError("entity file must hold a JSON array");
  std::vector<Entity> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto e = Entity::from_value(from_json(j[i]));
    if (!e) {
      throw JsonError("entity " + std::to_string(i) +
                      " lacks name/matches/action/params");
    }
    out.push_back(std::move(*e));
  }
  return out;
}

std::string type_to_json(const TypePtr& t, int indent) {
  return dump(type_json(t), indent);
}

std::string encoded_types_to_json(const EncodedTypes& enc, int indent) {
  Json j;
  j["matches"] = type_json(enc.matches);
  j["actions"] = type_json(enc.actions);
  j["params"] = type_json(enc.params);
  return dump(j, indent);
}

std::string run_to_json(const RunResult& run, int indent) {
  Json steps = Json::array();
  for (const auto& ev : run.trace) {
    Json s;
    s["index"] = ev.index;
    s["client"] = ev.client_id;
    s["label"] = ev.tau ? "tau" : op_name(ev.op);
    if (ev.server_id) s["server"] = *ev.server_id;
    if (ev.target) s["target"] = to_json(*ev.target);
    if (ev.payload) s["payload"] = to_json(*ev.payload);
    if (ev.response) s["response"] = to_json(*ev.response);
    steps.push_back(std::move(s));
  }
  Json clients = Json::array();
  for (const auto& c : run.final_network.clients) {
    Json cj;
    cj["id"] = c.id;
    cj["term"] = print_term(c.term);
    if (auto g = to_ground(c.term)) cj["value"] = to_json(*g);
    clients.push_back(std::move(cj));
  }
  Json servers = Json::array();
  for (const auto& s : run.final_network.servers) {
    Json sj;
    sj["id"] = s.id;
    if (const auto* a = s.state.address.get_if<GroundValue::Address>()) {
      sj["address"] = a->name;
    }
    sj["channels"] = s.state.channels;
    sj["entities"] = entities_json(s.state.entities);
    servers.push_back(std::move(sj));
  }
  Json j;
  j["steps"] = std::move(steps);
  j["clients"] = std::move(clients);
  j["servers"] = std::move(servers);
  return dump(j, indent);
}

}  // namespace fp4r
