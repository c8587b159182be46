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

#include "fp4r/subst.h"

#include <stdexcept>

namespace fp4r {
namespace {

void term_ftv(const TermPtr& t, std::set<std::string>& out);

void add_type_ftv(const TypePtr& ty, std::set<std::string>& out) {
  if (!ty) return;
  auto fv = free_type_vars(ty);
  out.insert(fv.begin(), fv.end());
}

void term_ftv(const TermPtr& t, std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, terms::Nil>) {
          add_type_ftv(x.annotation, out);
        } else if constexpr (std::is_same_v<T, terms::Cons>) {
          term_ftv(x.head, out);
          term_ftv(x.tail, out);
        } else if constexpr (std::is_same_v<T, terms::Head> ||
                             std::is_same_v<T, terms::Tail>) {
          term_ftv(x.list, out);
        } else if constexpr (std::is_same_v<T, terms::Record>) {
          for (const auto& f : x.fields) term_ftv(f.value, out);
        } else if constexpr (std::is_same_v<T, terms::Field>) {
          term_ftv(x.record, out);
        } else if constexpr (std::is_same_v<T, terms::App>) {
          term_ftv(x.fn, out);
          term_ftv(x.arg, out);
        } else if constexpr (std::is_same_v<T, terms::TypeApp>) {
          term_ftv(x.fn, out);
          add_type_ftv(x.arg, out);
        } else if constexpr (std::is_same_v<T, terms::Lambda>) {
          add_type_ftv(x.param_type, out);
          term_ftv(x.body, out);
        } else if constexpr (std::is_same_v<T, terms::TypeLambda>) {
          add_type_ftv(x.bound, out);
          std::set<std::string> inner;
          term_ftv(x.body, inner);
          inner.erase(x.var);
          out.insert(inner.begin(), inner.end());
        } else if constexpr (std::is_same_v<T, terms::Let>) {
          term_ftv(x.bound, out);
          term_ftv(x.body, out);
        } else if constexpr (std::is_same_v<T, terms::Match>) {
          term_ftv(x.scrutinee, out);
          for (const auto& c : x.cases) {
            add_type_ftv(c.type, out);
            term_ftv(c.body, out);
          }
        } else if constexpr (std::is_same_v<T, terms::Op>) {
          for (const auto& a : x.args) term_ftv(a, out);
        }
      },
      t->node);
}

std::set<std::string> term_free_type_vars(const TermPtr& t) {
  std::set<std::string> out;
  term_ftv(t, out);
  return out;
}

TermPtr rebuild(const TermPtr& original, Term::Node node) {
  return make_term(std::move(node), original->loc);
}

// Generic structural map over a term. `on_var` handles variables, `under`
// handles binders. Everything else recurses via `self`.
template <typename Self>
TermPtr map_children(const TermPtr& t, Self&& self,
                     const std::function<TypePtr(const TypePtr&)>& on_type) {
  auto ty = [&](const TypePtr& a) -> TypePtr { return a ? on_type(a) : a; };
  return std::visit(
      [&](const auto& x) -> TermPtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, terms::Literal> ||
                      std::is_same_v<T, terms::Var>) {
          return t;
        } else if constexpr (std::is_same_v<T, terms::Nil>) {
          return rebuild(t, terms::Nil{ty(x.annotation)});
        } else if constexpr (std::is_same_v<T, terms::Cons>) {
          return rebuild(t, terms::Cons{self(x.head), self(x.tail)});
        } else if constexpr (std::is_same_v<T, terms::Head>) {
          return rebuild(t, terms::Head{self(x.list)});
        } else if constexpr (std::is_same_v<T, terms::Tail>) {
          return rebuild(t, terms::Tail{self(x.list)});
        } else if constexpr (std::is_same_v<T, terms::Record>) {
          std::vector<RecordField> fields;
          fields.reserve(x.fields.size());
          for (const auto& f : x.fields) fields.push_back({f.label, self(f.value)});
          return rebuild(t, terms::Record{std::move(fields)});
        } else if constexpr (std::is_same_v<T, terms::Field>) {
          return rebuild(t, terms::Field{self(x.record), x.label});
        } else if constexpr (std::is_same_v<T, terms::App>) {
          return rebuild(t, terms::App{self(x.fn), self(x.arg)});
        } else if constexpr (std::is_same_v<T, terms::TypeApp>) {
          return rebuild(t, terms::TypeApp{self(x.fn), ty(x.arg)});
        } else if constexpr (std::is_same_v<T, terms::Op>) {
          std::vector<TermPtr> args;
          for (const auto& a : x.args) args.push_back(self(a));
          return rebuild(t, terms::Op{x.kind, std::move(args)});
        } else {
          // Binders are handled by the callers.
          throw std::logic_error("map_children on binder");
        }
      },
      t->node);
}

TermPtr subst_term_impl(const TermPtr& t, const std::string& x,
                        const TermPtr& v, const std::set<std::string>& v_ftv);

TermPtr subst_term_impl(const TermPtr& t, const std::string& x,
                        const TermPtr& v, const std::set<std::string>& v_ftv) {
  if (const auto* var_node = t->as<terms::Var>()) {
    return var_node->name == x ? v : t;
  }
  auto self = [&](const TermPtr& c) { return subst_term_impl(c, x, v, v_ftv); };
  if (const auto* l = t->as<terms::Lambda>()) {
    if (l->param == x) return t;
    return rebuild(t, terms::Lambda{l->param, l->param_type, self(l->body)});
  }
  if (const auto* tl = t->as<terms::TypeLambda>()) {
    if (v_ftv.count(tl->var)) {
      std::set<std::string> avoid = v_ftv;
      auto body_ftv = term_free_type_vars(tl->body);
      avoid.insert(body_ftv.begin(), body_ftv.end());
      std::string fresh = fresh_name(tl->var, avoid);
      TermPtr body = subst_type_in_term(tl->body, tl->var, type_var(fresh));
      return rebuild(t, terms::TypeLambda{fresh, tl->bound, self(body)});
    }
    return rebuild(t, terms::TypeLambda{tl->var, tl->bound, self(tl->body)});
  }
  if (const auto* lt = t->as<terms::Let>()) {
    TermPtr body = lt->var == x ? lt->body : self(lt->body);
    return rebuild(t, terms::Let{lt->var, self(lt->bound), body});
  }
  if (const auto* m = t->as<terms::Match>()) {
    std::vector<MatchCase> cases;
    cases.reserve(m->cases.size());
    for (const auto& c : m->cases) {
      cases.push_back({c.var, c.type, c.var == x ? c.body : self(c.body)});
    }
    return rebuild(t, terms::Match{self(m->scrutinee), std::move(cases)});
  }
  return map_children(t, self, [](const TypePtr& ty) { return ty; });
}

}  // namespace

TermPtr subst_term(const TermPtr& t, const std::string& x, const TermPtr& v) {
  if (!is_value(v)) {
    throw std::invalid_argument("substituted term is not a value");
  }
  if (!free_term_vars(v).empty()) {
    throw std::invalid_argument("substituted value has free variables");
  }
  return subst_term_impl(t, x, v, term_free_type_vars(v));
}

TermPtr subst_type_in_term(const TermPtr& t, const std::string& x,
                           const TypePtr& replacement) {
  auto on_type = [&](const TypePtr& ty) {
    return subst_type_in_type(ty, x, replacement);
  };
  auto self = [&](const TermPtr& c) {
    return subst_type_in_term(c, x, replacement);
  };
  if (const auto* l = t->as<terms::Lambda>()) {
    return rebuild(t, terms::Lambda{l->param, on_type(l->param_type),
                                    self(l->body)});
  }
  if (const auto* tl = t->as<terms::TypeLambda>()) {
    TypePtr bound = on_type(tl->bound);
    if (tl->var == x) return rebuild(t, terms::TypeLambda{tl->var, bound, tl->body});
    auto rep_ftv = free_type_vars(replacement);
    if (rep_ftv.count(tl->var)) {
      std::set<std::string> avoid = rep_ftv;
      auto body_ftv = term_free_type_vars(tl->body);
      avoid.insert(body_ftv.begin(), body_ftv.end());
      avoid.insert(x);
      std::string fresh = fresh_name(tl->var, avoid);
      TermPtr body = subst_type_in_term(tl->body, tl->var, type_var(fresh));
      return rebuild(t, terms::TypeLambda{fresh, bound, self(body)});
    }
    return rebuild(t, terms::TypeLambda{tl->var, bound, self(tl->body)});
  }
  if (const auto* lt = t->as<terms::Let>()) {
    return rebuild(t, terms::Let{lt->var, self(lt->bound), self(lt->body)});
  }
  if (const auto* m = t->as<terms::Match>()) {
    std::vector<MatchCase> cases;
    cases.reserve(m->cases.size());
    for (const auto& c : m->cases) {
      cases.push_back({c.var, on_type(c.type), self(c.body)});
    }
    return rebuild(t, terms::Match{self(m->scrutinee), std::move(cases)});
  }
  return map_children(t, self, on_type);
}

TypePtr subst_type_in_type(const TypePtr& t, const std::string& x,
                           const TypePtr& replacement) {
  auto self = [&](const TypePtr& c) {
    return subst_type_in_type(c, x, replacement);
  };
  return std::visit(
      [&](const auto& n) -> TypePtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, types::Top> ||
                      std::is_same_v<T, types::Basic> ||
                      std::is_same_v<T, types::Singleton>) {
          return t;
        } else if constexpr (std::is_same_v<T, types::Var>) {
          return n.name == x ? replacement : t;
        } else if constexpr (std::is_same_v<T, types::ServerRef>) {
          return server_ref_type(self(n.matches), self(n.actions),
                                 self(n.params));
        } else if constexpr (std::is_same_v<T, types::Chan>) {
          return chan_type(self(n.matches), self(n.actions), self(n.params));
        } else if constexpr (std::is_same_v<T, types::Record>) {
          std::vector<TypeField> fields;
          fields.reserve(n.fields.size());
          for (const auto& f : n.fields) fields.push_back({f.label, self(f.type)});
          return record_type(std::move(fields));
        } else if constexpr (std::is_same_v<T, types::List>) {
          return list_type(self(n.element));
        } else if constexpr (std::is_same_v<T, types::Arrow>) {
          return arrow_type(self(n.from), self(n.to));
        } else if constexpr (std::is_same_v<T, types::App>) {
          return type_app(self(n.fn), self(n.arg));
        } else if constexpr (std::is_same_v<T, types::Union>) {
          return union_type(self(n.left), self(n.right));
        } else if constexpr (std::is_same_v<T, types::Match>) {
          std::vector<MatchTypeCase> cases;
          cases.reserve(n.cases.size());
          for (const auto& c : n.cases) {
            cases.push_back({self(c.pattern), self(c.continuation)});
          }
          return match_type(self(n.scrutinee), std::move(cases));
        } else {
          static_assert(std::is_same_v<T, types::Forall>);
          TypePtr bound = self(n.bound);
          if (n.var == x) return forall_type(n.var, bound, n.body);
          auto body_ftv = free_type_vars(n.body);
          if (!body_ftv.count(x)) return forall_type(n.var, bound, n.body);
          auto rep_ftv = free_type_vars(replacement);
          if (rep_ftv.count(n.var)) {
            std::set<std::string> avoid = rep_ftv;
            avoid.insert(body_ftv.begin(), body_ftv.end());
            avoid.insert(x);
            std::string fresh = fresh_name(n.var, avoid);
            TypePtr body = subst_type_in_type(n.body, n.var, type_var(fresh));
            return forall_type(fresh, bound, self(body));
          }
          return forall_type(n.var, bound, self(n.body));
        }
      },
      t->node);
}

TermPtr rename_term_var(const TermPtr& t, const std::string& from,
                        const std::string& to) {
  if (const auto* v = t->as<terms::Var>()) {
    return v->name == from ? rebuild(t, terms::Var{to}) : t;
  }
  auto self = [&](const TermPtr& c) { return rename_term_var(c, from, to); };
  if (const auto* l = t->as<terms::Lambda>()) {
    if (l->param == from) return t;
    return rebuild(t, terms::Lambda{l->param, l->param_type, self(l->body)});
  }
  if (const auto* tl = t->as<terms::TypeLambda>()) {
    return rebuild(t, terms::TypeLambda{tl->var, tl->bound, self(tl->body)});
  }
  if (const auto* lt = t->as<terms::Let>()) {
    TermPtr body = lt->var == from ? lt->body : self(lt->body);
    return rebuild(t, terms::Let{lt->var, self(lt->bound), body});
  }
  if (const auto* m = t->as<terms::Match>()) {
    std::vector<MatchCase> cases;
    for (const auto& c : m->cases) {
      cases.push_back({c.var, c.type, c.var == from ? c.body : self(c.body)});
    }
    return rebuild(t, terms::Match{self(m->scrutinee), std::move(cases)});
  }
  return map_children(t, self, [](const TypePtr& ty) { return ty; });
}

}  // namespace fp4r
