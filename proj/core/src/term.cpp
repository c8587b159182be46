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

#include "fp4r/term.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace fp4r {

const char* op_name(OpKind kind) {
  switch (kind) {
    case OpKind::kConnect:
      return "Connect";
    case OpKind::kRead:
      return "Read";
    case OpKind::kInsert:
      return "Insert";
    case OpKind::kModify:
      return "Modify";
    case OpKind::kDelete:
      return "Delete";
  }
  return "?";
}

std::size_t op_arity(OpKind kind) { return kind == OpKind::kConnect ? 1 : 2; }

TermPtr make_term(Term::Node node, SourceLoc loc) {
  return std::make_shared<const Term>(Term{std::move(node), loc});
}

TermPtr literal(GroundValue v) {
  if (v.is<GroundValue::List>() || v.is<GroundValue::Record>()) {
    return from_ground(v);
  }
  return make_term(terms::Literal{std::move(v)});
}
TermPtr int_lit(std::int64_t v) { return literal(GroundValue::integer(v)); }
TermPtr bool_lit(bool v) { return literal(GroundValue::boolean(v)); }
TermPtr string_lit(std::string v) {
  return literal(GroundValue::string(std::move(v)));
}
TermPtr unit_lit() { return literal(GroundValue::unit()); }
TermPtr bytes_lit(std::vector<std::uint8_t> octets) {
  return literal(GroundValue::bytes(std::move(octets)));
}
TermPtr nil(TypePtr annotation) {
  return make_term(terms::Nil{std::move(annotation)});
}
TermPtr var(std::string name) { return make_term(terms::Var{std::move(name)}); }
TermPtr cons(TermPtr h, TermPtr t) {
  return make_term(terms::Cons{std::move(h), std::move(t)});
}
TermPtr head(TermPtr list) { return make_term(terms::Head{std::move(list)}); }
TermPtr tail(TermPtr list) { return make_term(terms::Tail{std::move(list)}); }

TermPtr record(std::vector<RecordField> fields) {
  std::unordered_set<std::string> seen;
  for (const auto& f : fields) {
    if (!seen.insert(f.label).second) {
      throw std::invalid_argument("duplicate record label '" + f.label + "'");
    }
  }
  return make_term(terms::Record{std::move(fields)});
}

TermPtr field(TermPtr rec, std::string label) {
  return make_term(terms::Field{std::move(rec), std::move(label)});
}
TermPtr app(TermPtr fn, TermPtr arg) {
  return make_term(terms::App{std::move(fn), std::move(arg)});
}
TermPtr type_app_term(TermPtr fn, TypePtr arg) {
  return make_term(terms::TypeApp{std::move(fn), std::move(arg)});
}
TermPtr lambda(std::string param, TypePtr type, TermPtr body) {
  return make_term(
      terms::Lambda{std::move(param), std::move(type), std::move(body)});
}
TermPtr type_lambda(std::string v, TypePtr bound, TermPtr body) {
  if (!bound) bound = top_type();
  return make_term(
      terms::TypeLambda{std::move(v), std::move(bound), std::move(body)});
}
TermPtr let(std::string v, TermPtr bound, TermPtr body) {
  return make_term(terms::Let{std::move(v), std::move(bound), std::move(body)});
}
TermPtr match(TermPtr scrutinee, std::vector<MatchCase> cases) {
  if (cases.empty()) throw std::invalid_argument("match with no cases");
  return make_term(terms::Match{std::move(scrutinee), std::move(cases)});
}
TermPtr op(OpKind kind, std::vector<TermPtr> args) {
  if (args.size() != op_arity(kind)) {
    throw std::invalid_argument(std::string(op_name(kind)) + " expects " +
                                std::to_string(op_arity(kind)) +
                                " argument(s)");
  }
  return make_term(terms::Op{kind, std::move(args)});
}

bool is_value(const TermPtr& t) {
  if (t->is<terms::Literal>() || t->is<terms::Nil>() ||
      t->is<terms::Lambda>() || t->is<terms::TypeLambda>()) {
    return true;
  }
  if (const auto* c = t->as<terms::Cons>()) {
    return is_value(c->head) && is_value(c->tail);
  }
  if (const auto* r = t->as<terms::Record>()) {
    for (const auto& f : r->fields) {
      if (!is_value(f.value)) return false;
    }
    return true;
  }
  return false;
}

std::optional<GroundValue> to_ground(const TermPtr& t) {
  if (const auto* lit = t->as<terms::Literal>()) return lit->value;
  if (t->is<terms::Nil>()) return GroundValue::nil();
  if (t->is<terms::Cons>()) {
    std::vector<GroundValue> items;
    TermPtr cur = t;
    while (const auto* c = cur->as<terms::Cons>()) {
      auto h = to_ground(c->head);
      if (!h) return std::nullopt;
      items.push_back(std::move(*h));
      cur = c->tail;
    }
    if (!cur->is<terms::Nil>()) return std::nullopt;
    return GroundValue::list(std::move(items));
  }
  if (const auto* r = t->as<terms::Record>()) {
    std::vector<std::pair<std::string, GroundValue>> fields;
    for (const auto& f : r->fields) {
      auto v = to_ground(f.value);
      if (!v) return std::nullopt;
      fields.emplace_back(f.label, std::move(*v));
    }
    return GroundValue::record(std::move(fields));
  }
  return std::nullopt;
}

TermPtr from_ground(const GroundValue& v) {
  if (const auto* l = v.get_if<GroundValue::List>()) {
    TermPtr out = nil();
    for (auto it = l->items.rbegin(); it != l->items.rend(); ++it) {
      out = cons(from_ground(*it), out);
    }
    return out;
  }
  if (const auto* r = v.get_if<GroundValue::Record>()) {
    std::vector<RecordField> fields;
    fields.reserve(r->fields.size());
    for (const auto& [label, value] : r->fields) {
      fields.push_back({label, from_ground(value)});
    }
    return make_term(terms::Record{std::move(fields)});
  }
  return make_term(terms::Literal{v});
}

namespace {

void collect_fv(const TermPtr& t, std::vector<std::string>& bound,
                std::set<std::string>& out) {
  auto bound_has = [&](const std::string& n) {
    return std::find(bound.begin(), bound.end(), n) != bound.end();
  };
  auto under = [&](const std::string& binder, const TermPtr& body) {
    bound.push_back(binder);
    collect_fv(body, bound, out);
    bound.pop_back();
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, terms::Var>) {
          if (!bound_has(x.name)) out.insert(x.name);
        } else if constexpr (std::is_same_v<T, terms::Cons>) {
          collect_fv(x.head, bound, out);
          collect_fv(x.tail, bound, out);
        } else if constexpr (std::is_same_v<T, terms::Head> ||
                             std::is_same_v<T, terms::Tail>) {
          collect_fv(x.list, bound, out);
        } else if constexpr (std::is_same_v<T, terms::Record>) {
          for (const auto& f : x.fields) collect_fv(f.value, bound, out);
        } else if constexpr (std::is_same_v<T, terms::Field>) {
          collect_fv(x.record, bound, out);
        } else if constexpr (std::is_same_v<T, terms::App>) {
          collect_fv(x.fn, bound, out);
          collect_fv(x.arg, bound, out);
        } else if constexpr (std::is_same_v<T, terms::TypeApp>) {
          collect_fv(x.fn, bound, out);
        } else if constexpr (std::is_same_v<T, terms::Lambda>) {
          under(x.param, x.body);
        } else if constexpr (std::is_same_v<T, terms::TypeLambda>) {
          collect_fv(x.body, bound, out);
        } else if constexpr (std::is_same_v<T, terms::Let>) {
          collect_fv(x.bound, bound, out);
          under(x.var, x.body);
        } else if constexpr (std::is_same_v<T, terms::Match>) {
          collect_fv(x.scrutinee, bound, out);
          for (const auto& c : x.cases) under(c.var, c.body);
        } else if constexpr (std::is_same_v<T, terms::Op>) {
          for (const auto& a : x.args) collect_fv(a, bound, out);
        }
      },
      t->node);
}

bool types_eq(const TypePtr& a, const TypePtr& b) {
  if (!a || !b) return a == b;
  return alpha_equal(a, b);
}

}  // namespace

std::set<std::string> free_term_vars(const TermPtr& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_fv(t, bound, out);
  return out;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = *b->as<T>();
        if constexpr (std::is_same_v<T, terms::Literal>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, terms::Nil>) {
          return true;
        } else if constexpr (std::is_same_v<T, terms::Var>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, terms::Cons>) {
          return term_equal(x.head, y.head) && term_equal(x.tail, y.tail);
        } else if constexpr (std::is_same_v<T, terms::Head> ||
                             std::is_same_v<T, terms::Tail>) {
          return term_equal(x.list, y.list);
        } else if constexpr (std::is_same_v<T, terms::Record>) {
          if (x.fields.size() != y.fields.size()) return false;
          for (std::size_t i = 0; i < x.fields.size(); ++i) {
            if (x.fields[i].label != y.fields[i].label ||
                !term_equal(x.fields[i].value, y.fields[i].value)) {
              return false;
            }
          }
          return true;
        } else if constexpr (std::is_same_v<T, terms::Field>) {
          return x.label == y.label && term_equal(x.record, y.record);
        } else if constexpr (std::is_same_v<T, terms::App>) {
          return term_equal(x.fn, y.fn) && term_equal(x.arg, y.arg);
        } else if constexpr (std::is_same_v<T, terms::TypeApp>) {
          return term_equal(x.fn, y.fn) && types_eq(x.arg, y.arg);
        } else if constexpr (std::is_same_v<T, terms::Lambda>) {
          return x.param == y.param && types_eq(x.param_type, y.param_type) &&
                 term_equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, terms::TypeLambda>) {
          return x.var == y.var && types_eq(x.bound, y.bound) &&
                 term_equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, terms::Let>) {
          return x.var == y.var && term_equal(x.bound, y.bound) &&
                 term_equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, terms::Match>) {
          if (x.cases.size() != y.cases.size()) return false;
          if (!term_equal(x.scrutinee, y.scrutinee)) return false;
          for (std::size_t i = 0; i < x.cases.size(); ++i) {
            if (x.cases[i].var != y.cases[i].var ||
                !types_eq(x.cases[i].type, y.cases[i].type) ||
                !term_equal(x.cases[i].body, y.cases[i].body)) {
              return false;
            }
          }
          return true;
        } else {
          static_assert(std::is_same_v<T, terms::Op>);
          if (x.kind != y.kind || x.args.size() != y.args.size()) return false;
          for (std::size_t i = 0; i < x.args.size(); ++i) {
            if (!term_equal(x.args[i], y.args[i])) return false;
          }
          return true;
        }
      },
      a->node);
}

void for_each_literal(const TermPtr& t,
                      const std::function<void(const GroundValue&)>& visit) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, terms::Literal>) {
          visit(x.value);
        } else if constexpr (std::is_same_v<T, terms::Cons>) {
          for_each_literal(x.head, visit);
          for_each_literal(x.tail, visit);
        } else if constexpr (std::is_same_v<T, terms::Head> ||
                             std::is_same_v<T, terms::Tail>) {
          for_each_literal(x.list, visit);
        } else if constexpr (std::is_same_v<T, terms::Record>) {
          for (const auto& f : x.fields) for_each_literal(f.value, visit);
        } else if constexpr (std::is_same_v<T, terms::Field>) {
          for_each_literal(x.record, visit);
        } else if constexpr (std::is_same_v<T, terms::App>) {
          for_each_literal(x.fn, visit);
          for_each_literal(x.arg, visit);
        } else if constexpr (std::is_same_v<T, terms::TypeApp>) {
          for_each_literal(x.fn, visit);
        } else if constexpr (std::is_same_v<T, terms::Lambda> ||
                             std::is_same_v<T, terms::TypeLambda>) {
          for_each_literal(x.body, visit);
        } else if constexpr (std::is_same_v<T, terms::Let>) {
          for_each_literal(x.bound, visit);
          for_each_literal(x.body, visit);
        } else if constexpr (std::is_same_v<T, terms::Match>) {
          for_each_literal(x.scrutinee, visit);
          for (const auto& c : x.cases) for_each_literal(c.body, visit);
        } else if constexpr (std::is_same_v<T, terms::Op>) {
          for (const auto& a : x.args) for_each_literal(a, visit);
        }
      },
      t->node);
}

}  // namespace fp4r
