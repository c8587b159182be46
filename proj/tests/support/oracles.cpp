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

#include "support/oracles.h"

#include "fp4r/encoding.h"
#include "fp4r/sugar.h"
#include "fp4r/term.h"
#include "fp4r/typing.h"

namespace fp4r::testing {

std::vector<Entity> read_oracle(const std::vector<Entity>& entities,
                                const Entity& query) {
  const GroundValue star = GroundValue::string("*");
  std::vector<Entity> out;
  for (const Entity& e : entities) {
    if (query.table_name == "*") {
      out.push_back(e);
      continue;
    }
    if (e.table_name != query.table_name) continue;
    if (query.matches != star && e.matches != query.matches) continue;
    if (query.action_name != "*" && e.action_name != query.action_name) continue;
    if (query.priority && *query.priority != star && e.priority != query.priority) {
      continue;
    }
    out.push_back(e);
  }
  return out;
}

EncodedTypes router_triple() {
  auto S = [](const char* s) { return string_singleton(s); };
  TypePtr lpm = sugar::option(
      record_type({{"value", bytes_type()}, {"prefixLen", int_type()}}));
  TypePtr fwd = record_type({{"mac_dst", bytes_type()}, {"port", bytes_type()}});
  TypePtr x = type_var("X");
  EncodedTypes e;
  e.matches = forall_type(
      "X", top_type(),
      match_type(x, {{S("IPv4_table"),
                      union_type(record_type({{"IPv4_dst_addr", lpm}}), S("*"))},
                     {S("IPv6_table"),
                      union_type(record_type({{"IPv6_dst_addr", lpm}}), S("*"))},
                     {S("*"), S("*")}}));
  e.actions = forall_type(
      "X", top_type(),
      match_type(x, {{S("IPv4_table"), union_of({S("IPv4_forward"), S("Drop"), S("*")})},
                     {S("IPv6_table"), union_of({S("IPv6_forward"), S("Drop"), S("*")})},
                     {S("*"), S("*")}}));
  e.params = forall_type("X", top_type(),
                         match_type(x, {{S("IPv4_forward"), fwd},
                                        {S("IPv6_forward"), fwd},
                                        {S("Drop"), unit_type()},
                                        {S("*"), unit_type()}}));
  return e;
}

bool insert_typechecks(const GroundValue& v, const ServerConfig& config) {
  EncodedTypes enc = encode_config(config);
  GroundValue ch = GroundValue::channel("oracle#1", enc.matches, enc.actions, enc.params);
  try {
    typecheck({}, op(OpKind::kInsert, {literal(ch), literal(v)}));
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

}  // namespace fp4r::testing
