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

#ifndef FP4R_TYPE_H_
#define FP4R_TYPE_H_

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fp4r/ground_value.h"

namespace fp4r {

enum class BasicKind { kInt, kBool, kString, kUnit, kBytes };

struct TypeField {
  std::string label;
  TypePtr type;
};

struct MatchTypeCase {
  TypePtr pattern;
  TypePtr continuation;
};

namespace types {

struct Top {};
struct Basic {
  BasicKind kind;
};
struct ServerRef {
  TypePtr matches, actions, params;
};
struct Chan {
  TypePtr matches, actions, params;
};
struct Record {
  std::vector<TypeField> fields;
};
struct List {
  TypePtr element;
};
struct Arrow {
  TypePtr from, to;
};
struct Var {
  std::string name;
};
struct Forall {
  std::string var;
  TypePtr bound;
  TypePtr body;
};
struct App {
  TypePtr fn, arg;
};
struct Union {
  TypePtr left, right;
};
struct Singleton {
  GroundValue value;
};
struct Match {
  TypePtr scrutinee;
  std::vector<MatchTypeCase> cases;
};

}  // namespace types

struct Type {
  using Node = std::variant<types::Top, types::Basic, types::ServerRef,
                            types::Chan, types::Record, types::List,
                            types::Arrow, types::Var, types::Forall,
                            types::App, types::Union, types::Singleton,
                            types::Match>;
  Node node;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
};

// Builders.
TypePtr top_type();
TypePtr basic_type(BasicKind kind);
TypePtr int_type();
TypePtr bool_type();
TypePtr string_type();
TypePtr unit_type();
TypePtr bytes_type();
TypePtr server_ref_type(TypePtr tm, TypePtr ta, TypePtr tp);
TypePtr chan_type(TypePtr tm, TypePtr ta, TypePtr tp);
// Throws std::invalid_argument on duplicate labels.
TypePtr record_type(std::vector<TypeField> fields);
TypePtr list_type(TypePtr element);
TypePtr arrow_type(TypePtr from, TypePtr to);
TypePtr type_var(std::string name);
TypePtr forall_type(std::string var, TypePtr bound, TypePtr body);
TypePtr type_app(TypePtr fn, TypePtr arg);
TypePtr type_app(TypePtr fn, const std::vector<TypePtr>& args);
TypePtr union_type(TypePtr left, TypePtr right);
// Left-nested union of a non-empty list of alternatives.
TypePtr union_of(const std::vector<TypePtr>& alternatives);
TypePtr singleton_type(GroundValue value);
TypePtr string_singleton(std::string s);
// Throws std::invalid_argument on an empty case list.
TypePtr match_type(TypePtr scrutinee, std::vector<MatchTypeCase> cases);

const char* basic_kind_name(BasicKind kind);

// Flattens nested unions into their alternatives, left to right.
std::vector<TypePtr> union_alternatives(const TypePtr& t);

// Alpha-equivalence; record fields are matched by label.
bool alpha_equal(const TypePtr& a, const TypePtr& b);

std::set<std::string> free_type_vars(const TypePtr& t);

// A name derived from `base` that is not in `avoid`.
std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid);

}  // namespace fp4r

#endif  // FP4R_TYPE_H_
