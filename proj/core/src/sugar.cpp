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

#include "fp4r/sugar.h"

namespace fp4r::sugar {

TypePtr option_def() {
  static const TypePtr def = forall_type(
      "A", top_type(),
      union_type(record_type({{"some", type_var("A")}}),
                 record_type({{"none", unit_type()}})));
  return def;
}

namespace {

// Wraps `body` in the five binders shared by TableEntry and P4Entity.
TypePtr entry_binders(TypePtr body) {
  TypePtr xa_bound = type_app(type_var("Ta"), type_var("Xn"));
  TypePtr t = forall_type("Xa", xa_bound, std::move(body));
  for (const char* v : {"Xn", "Tp", "Ta", "Tm"}) {
    t = forall_type(v, top_type(), t);
  }
  return t;
}

std::vector<TypePtr> binder_vars() {
  return {type_var("Tm"), type_var("Ta"), type_var("Tp"), type_var("Xn"),
          type_var("Xa")};
}

}  // namespace

TypePtr table_entry_def() {
  static const TypePtr def = entry_binders(record_type({
      {"name", type_var("Xn")},
      {"matches", type_app(type_var("Tm"), type_var("Xn"))},
      {"action", type_var("Xa")},
      {"params", type_app(type_var("Tp"), type_var("Xa"))},
  }));
  return def;
}

TypePtr p4entity_def() {
  static const TypePtr def =
      entry_binders(type_app(table_entry_def(), binder_vars()));
  return def;
}

TypePtr option(TypePtr a) { return type_app(option_def(), std::move(a)); }

TypePtr table_entry(TypePtr tm, TypePtr ta, TypePtr tp, TypePtr xn,
                    TypePtr xa) {
  return type_app(table_entry_def(), {std::move(tm), std::move(ta),
                                      std::move(tp), std::move(xn),
                                      std::move(xa)});
}

TypePtr p4entity(TypePtr tm, TypePtr ta, TypePtr tp, TypePtr xn, TypePtr xa) {
  return type_app(p4entity_def(), {std::move(tm), std::move(ta), std::move(tp),
                                   std::move(xn), std::move(xa)});
}

TypePtr lookup(const std::string& name) {
  if (name == "Option") return option_def();
  if (name == "TableEntry") return table_entry_def();
  if (name == "P4Entity") return p4entity_def();
  return nullptr;
}

std::optional<std::string> name_of(const TypePtr& t) {
  if (!t->is<types::Forall>()) return std::nullopt;
  if (t == option_def() || alpha_equal(t, option_def())) return "Option";
  if (t == table_entry_def() || alpha_equal(t, table_entry_def())) {
    return "TableEntry";
  }
  if (t == p4entity_def() || alpha_equal(t, p4entity_def())) {
    return "P4Entity";
  }
  return std::nullopt;
}

}  // namespace fp4r::sugar
