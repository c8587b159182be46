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

#include "fp4r/scenario.h"

#include <fstream>
#include <map>
#include <sstream>

#include "fp4r/encoding.h"
#include "fp4r/json.h"
#include "json.hpp"

namespace fp4r {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ServerConfig load_p4info_file(const fs::path& path, bool action_wildcard) {
  try {
    return to_config(parse_p4info(read_text_file(path)), action_wildcard);
  } catch (const P4InfoError& e) {
    throw P4InfoError(path.string() + ": " + e.what());
  }
}

void add_config_aliases(TypeAliases& aliases, const ServerConfig& config,
                        const std::string& prefix) {
  Program p = parse_program(emit_type_decls(config, prefix), aliases);
  for (auto& [name, t] : p.aliases) aliases.insert_or_assign(name, t);
}

Program load_program_file(const fs::path& path, const TypeAliases& aliases) {
  std::string text = read_text_file(path);
  try {
    return parse_program(text, aliases);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
  }
}

namespace {

std::string str_field(const Json& j, const char* key, const std::string& where,
                      const std::string& fallback = {}) {
  if (!j.contains(key)) {
    if (!fallback.empty()) return fallback;
    throw ScenarioError(where + ": missing '" + key + "'");
  }
  if (!j.at(key).is_string()) {
    throw ScenarioError(where + ": '" + key + "' must be a string");
  }
  return j.at(key).get<std::string>();
}

}  // namespace

Scenario load_scenario(const fs::path& path, bool action_wildcard) {
  const fs::path base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    fs::path q(p);
    return q.is_absolute() ? q : base / q;
  };
  Json root;
  try {
    root = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw ScenarioError(path.string() + ": invalid JSON: " + e.what());
  }
  if (!root.is_object()) throw ScenarioError(path.string() + ": not an object");

  Scenario sc;
  std::map<std::string, ServerConfig> by_prefix;
  const Json servers = root.value("servers", Json::array());
  for (std::size_t i = 0; i < servers.size(); ++i) {
    const Json& s = servers[i];
    std::string where = "servers[" + std::to_string(i) + "]";
    ServerProc proc;
    proc.id = str_field(s, "id", where, "s" + std::to_string(i + 1));
    ServerConfig config =
        load_p4info_file(resolve(str_field(s, "p4info", where)), action_wildcard);
    std::string address = str_field(s, "address", where, proc.id);
    std::string prefix = s.contains("prefix") ? str_field(s, "prefix", where) : "";
    auto [it, fresh] = by_prefix.emplace(prefix, config);
    if (fresh) {
      add_config_aliases(sc.aliases, config, prefix);
    } else if (!(it->second == config)) {
      throw ScenarioError(where + ": prefix '" + prefix +
                          "' is already used by a different configuration");
    }
    proc.state.config = config;
    proc.state.address = server_address(address, config);
    if (s.contains("entities")) {
      const Json& e = s.at("entities");
      proc.state.entities =
          e.is_string() ? entities_from_json(read_text_file(resolve(e.get<std::string>())))
                        : entities_from_json(e.dump());
    }
    sc.network.servers.push_back(std::move(proc));
  }

  if (root.contains("decls")) {
    for (const auto& d : root.at("decls")) {
      Program p = load_program_file(resolve(d.get<std::string>()), sc.aliases);
      for (auto& [name, t] : p.aliases) sc.aliases.insert_or_assign(name, t);
    }
  }

  const Json clients = root.value("clients", Json::array());
  for (std::size_t i = 0; i < clients.size(); ++i) {
    const Json& c = clients[i];
    std::string where = "clients[" + std::to_string(i) + "]";
    ClientProc proc;
    proc.id = str_field(c, "id", where, "c" + std::to_string(i + 1));
    TypeAliases aliases = sc.aliases;
    if (c.contains("decls")) {
      for (const auto& d : c.at("decls")) {
        Program p = load_program_file(resolve(d.get<std::string>()), aliases);
        for (auto& [name, t] : p.aliases) aliases.insert_or_assign(name, t);
      }
    }
    Program p = load_program_file(resolve(str_field(c, "program", where)), aliases);
    if (!p.term) throw ScenarioError(where + ": program has no term");
    proc.term = p.term;
    sc.network.clients.push_back(std::move(proc));
  }
  return sc;
}

}  // namespace fp4r
