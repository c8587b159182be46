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

#ifndef FP4R_TERM_H_
#define FP4R_TERM_H_

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fp4r/ground_value.h"
#include "fp4r/type.h"

namespace fp4r {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class OpKind { kConnect, kRead, kInsert, kModify, kDelete };

const char* op_name(OpKind kind);
std::size_t op_arity(OpKind kind);

struct SourceLoc {
  int line = 0;
  int column = 0;
};

struct RecordField {
  std::string label;
  TermPtr value;
};

struct MatchCase {
  std::string var;
  TypePtr type;
  TermPtr body;
};

namespace terms {

// Scalar ground value: unit, integer, boolean, string, bytes, address or
// channel. Lists and records are built from Cons/Nil/Record.
struct Literal {
  GroundValue value;
};
// `nil[T]`; the annotation may be null and never takes part in equality.
struct Nil {
  TypePtr annotation;
};
struct Var {
  std::string name;
};
struct Cons {
  TermPtr head, tail;
};
struct Head {
  TermPtr list;
};
struct Tail {
  TermPtr list;
};
struct Record {
  std::vector<RecordField> fields;
};
struct Field {
  TermPtr record;
  std::string label;
};
struct App {
  TermPtr fn, arg;
};
struct TypeApp {
  TermPtr fn;
  TypePtr arg;
};
struct Lambda {
  std::string param;
  TypePtr param_type;
  TermPtr body;
};
struct TypeLambda {
  std::string var;
  TypePtr bound;
  TermPtr body;
};
struct Let {
  std::string var;
  TermPtr bound;
  TermPtr body;
};
struct Match {
  TermPtr scrutinee;
  std::vector<MatchCase> cases;
};
struct Op {
  OpKind kind;
  std::vector<TermPtr> args;
};

}  // namespace terms

struct Term {
  using Node =
      std::variant<terms::Literal, terms::Nil, terms::Var, terms::Cons,
                   terms::Head, terms::Tail, terms::Record, terms::Field,
                   terms::App, terms::TypeApp, terms::Lambda, terms::TypeLambda,
                   terms::Let, terms::Match, terms::Op>;
  Node node;
  SourceLoc loc;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
};

// Builders. Record and match builders throw std::invalid_argument on
// duplicate labels or an empty case list; op() checks the arity.
TermPtr make_term(Term::Node node, SourceLoc loc = {});
TermPtr literal(GroundValue v);
TermPtr int_lit(std::int64_t v);
TermPtr bool_lit(bool v);
TermPtr string_lit(std::string v);
TermPtr unit_lit();
TermPtr bytes_lit(std::vector<std::uint8_t> octets);
TermPtr nil(TypePtr annotation = nullptr);
TermPtr var(std::string name);
TermPtr cons(TermPtr head, TermPtr tail);
TermPtr head(TermPtr list);
TermPtr tail(TermPtr list);
TermPtr record(std::vector<RecordField> fields);
TermPtr field(TermPtr record, std::string label);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr type_app_term(TermPtr fn, TypePtr arg);
TermPtr lambda(std::string param, TypePtr type, TermPtr body);
TermPtr type_lambda(std::string var, TypePtr bound, TermPtr body);
TermPtr let(std::string var, TermPtr bound, TermPtr body);
TermPtr match(TermPtr scrutinee, std::vector<MatchCase> cases);
TermPtr op(OpKind kind, std::vector<TermPtr> args);

// Values: ground literals, nil, lambdas, type lambdas, and cons cells and
// records whose components are values.
bool is_value(const TermPtr& t);

// The ground value denoted by `t`, if `t` is a ground value (a value with no
// abstraction inside, whose list spine is proper).
std::optional<GroundValue> to_ground(const TermPtr& t);

// The canonical term for a ground value.
TermPtr from_ground(const GroundValue& v);

std::set<std::string> free_term_vars(const TermPtr& t);

// Structural equality; nil annotations and source locations are ignored.
bool term_equal(const TermPtr& a, const TermPtr& b);

// Pre-order walk over every ground literal reachable from `t`, including those
// nested inside records and lists.
void for_each_literal(const TermPtr& t,
                      const std::function<void(const GroundValue&)>& visit);

}  // namespace fp4r

#endif  // FP4R_TERM_H_
