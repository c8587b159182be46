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

#include "fp4r/typing.h"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "fp4r/subst.h"
#include "fp4r/sugar.h"
#include "fp4r/syntax.h"

namespace fp4r {

TypingEnv TypingEnv::with_term(std::string name, TypePtr type) const {
  TypingEnv out = *this;
  out.bindings_.push_back({Binding::Kind::kTerm, std::move(name), std::move(type)});
  return out;
}

TypingEnv TypingEnv::with_type(std::string name, TypePtr bound) const {
  TypingEnv out = *this;
  if (!bound) bound = top_type();
  out.bindings_.push_back({Binding::Kind::kType, std::move(name), std::move(bound)});
  return out;
}

const Binding* TypingEnv::lookup_term(const std::string& name) const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
    if (it->name == name) {
      return it->kind == Binding::Kind::kTerm ? &*it : nullptr;
    }
  }
  return nullptr;
}

const Binding* TypingEnv::lookup_type(const std::string& name) const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
    if (it->name == name) {
      return it->kind == Binding::Kind::kType ? &*it : nullptr;
    }
  }
  return nullptr;
}

bool TypingEnv::binds(const std::string& name) const {
  return std::any_of(bindings_.begin(), bindings_.end(),
                     [&](const Binding& b) { return b.name == name; });
}

const char* type_error_kind_name(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::kInvalidEnv:
      return "invalid-env";
    case TypeErrorKind::kInvalidType:
      return "invalid-type";
    case TypeErrorKind::kNotSubtype:
      return "not-subtype";
    case TypeErrorKind::kNotExhaustive:
      return "not-exhaustive";
    case TypeErrorKind::kNoMatchCase:
      return "no-match-case";
    case TypeErrorKind::kUnknownVariable:
      return "unknown-variable";
    case TypeErrorKind::kFieldMissing:
      return "field-missing";
    case TypeErrorKind::kOpArgMismatch:
      return "op-arg-mismatch";
    case TypeErrorKind::kFuelExhausted:
      return "normalization-fuel-exhausted";
  }
  return "?";
}

TypeError::TypeError(TypeErrorKind kind, std::string message, SourceLoc loc,
                     TypePtr expected, TypePtr actual, std::string path)
    : std::runtime_error(message),
      kind_(kind),
      message_(std::move(message)),
      loc_(loc),
      expected_(std::move(expected)),
      actual_(std::move(actual)),
      path_(std::move(path)) {}

std::string TypeError::render() const {
  std::string out;
  if (loc_.line > 0) {
    out += std::to_string(loc_.line) + ":" + std::to_string(loc_.column) + ": ";
  }
  out += std::string(type_error_kind_name(kind_)) + ": " + message_;
  if (expected_ && actual_) {
    out += ": a value of type " + print_type(expected_) +
           " is required, but " + print_type(actual_) + " was found";
  }
  return out;
}

namespace {

constexpr int kMaxDepth = 600;

enum class Tri { kNo, kYes, kUnknown };

const char* const kEntityFields[] = {"name", "matches", "action", "params"};

std::set<std::string> env_names(const TypingEnv& env) {
  std::set<std::string> out;
  for (const auto& b : env.bindings()) out.insert(b.name);
  return out;
}

// Patterns of an encoded lookup type `forall T. T match {P1 => .., ...}`.
std::optional<std::vector<TypePtr>> lookup_patterns(const TypePtr& t) {
  const auto* f = t->as<types::Forall>();
  if (!f) return std::nullopt;
  const auto* m = f->body->as<types::Match>();
  if (!m) return std::nullopt;
  const auto* v = m->scrutinee->as<types::Var>();
  if (!v || v->name != f->var) return std::nullopt;
  std::vector<TypePtr> out;
  for (const auto& c : m->cases) out.push_back(c.pattern);
  return out;
}

const std::string* singleton_string(const TypePtr& t) {
  if (const auto* s = t->as<types::Singleton>()) {
    if (const auto* str = s->value.get_if<GroundValue::Str>()) {
      return &str->value;
    }
  }
  return nullptr;
}

class Checker {
 public:
  explicit Checker(const TypingOptions& opts) : opts_(opts) {}

  TypePtr whnf(const TypingEnv& env, const TypePtr& t);
  TypePtr expose(const TypingEnv& env, const TypePtr& t);
  bool sub(const TypingEnv& env, const TypePtr& a, const TypePtr& b);
  bool dis(const TypingEnv& env, const TypePtr& a, const TypePtr& b);
  Tri mem(const TypingEnv& env, const GroundValue& v, const TypePtr& t);
  TypePtr normalize(const TypingEnv& env, const TypePtr& t);
  bool valid(const TypingEnv& env, const TypePtr& t);
  bool env_ok(const TypingEnv& env);
  std::optional<std::size_t> reduce_index(const TypingEnv& env,
                                          const TypePtr& scrutinee,
                                          const std::vector<MatchTypeCase>& cases);
  TypePtr synth(const TypingEnv& env, const TermPtr& t);
  void check_entity(const TypingEnv& env, const TypePtr& entity_type,
                    const TypePtr& tm, const TypePtr& ta, const TypePtr& tp,
                    SourceLoc loc);
  TypePtr read_element(const TypingEnv& env, const TypePtr& query_type,
                       const TypePtr& tm, const TypePtr& ta, const TypePtr& tp);

 private:
  class Scope {
   public:
    explicit Scope(Checker& c) : c_(c) {
      if (c_.depth_ == 0) c_.fuel_left_ = c_.opts_.fuel;
      if (++c_.depth_ > kMaxDepth) {
        --c_.depth_;
        throw TypeError(TypeErrorKind::kFuelExhausted,
                        "type-level computation nested too deeply");
      }
    }
    ~Scope() { --c_.depth_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    Checker& c_;
  };

  void burn() {
    if (fuel_left_-- <= 0) {
      throw TypeError(TypeErrorKind::kFuelExhausted,
                      "type normalization did not terminate within " +
                          std::to_string(opts_.fuel) + " rewrites");
    }
  }

  bool equiv(const TypingEnv& env, const TypePtr& a, const TypePtr& b) {
    return alpha_equal(a, b) || (sub(env, a, b) && sub(env, b, a));
  }
  bool match2(const TypingEnv& env, const types::Match& a,
              const types::Match& b);
  TypePtr step_once(const TypingEnv& env, const TypePtr& t);
  // The match types met while reducing t one step at a time.
  std::vector<TypePtr> match_forms(const TypingEnv& env, const TypePtr& t);
  bool structural(const TypingEnv& env, const TypePtr& a, const TypePtr& b);
  std::string fresh_tvar(const TypingEnv& env, const std::string& base,
                         std::initializer_list<TypePtr> avoid_in);
  TypePtr field_view(const TypePtr& c, const std::string& label);
  TypePtr synth_list_op(const TypingEnv& env, const TermPtr& t,
                        const TypePtr& list_type, bool is_head);

  TypingOptions opts_;
  int depth_ = 0;
  int fuel_left_ = 0;
};

TypePtr Checker::whnf(const TypingEnv& env, const TypePtr& t) {
  Scope scope(*this);
  TypePtr cur = t;
  for (;;) {
    if (const auto* a = cur->as<types::App>()) {
      TypePtr fn = whnf(env, a->fn);
      const auto* f = fn->as<types::Forall>();
      if (f == nullptr || !sub(env, a->arg, f->bound)) {
        return fn == a->fn ? cur : type_app(fn, a->arg);
      }
      burn();
      cur = subst_type_in_type(f->body, f->var, a->arg);
      continue;
    }
    if (const auto* m = cur->as<types::Match>()) {
      auto k = reduce_index(env, m->scrutinee, m->cases);
      if (!k) return cur;
      burn();
      cur = m->cases[*k].continuation;
      continue;
    }
    return cur;
  }
}

TypePtr Checker::expose(const TypingEnv& env, const TypePtr& t) {
  Scope scope(*this);
  TypePtr cur = whnf(env, t);
  for (int hops = 0; hops < kMaxDepth; ++hops) {
    const auto* v = cur->as<types::Var>();
    if (!v) return cur;
    const Binding* b = env.lookup_type(v->name);
    if (!b) return cur;
    cur = whnf(env, b->type);
  }
  return cur;
}

std::optional<std::size_t> Checker::reduce_index(
    const TypingEnv& env, const TypePtr& scrutinee,
    const std::vector<MatchTypeCase>& cases) {
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (sub(env, scrutinee, cases[i].pattern)) return i;
    if (!dis(env, scrutinee, cases[i].pattern)) return std::nullopt;
  }
  return std::nullopt;
}

std::string Checker::fresh_tvar(const TypingEnv& env, const std::string& base,
                                std::initializer_list<TypePtr> avoid_in) {
  std::set<std::string> avoid = env_names(env);
  for (const auto& t : avoid_in) {
    if (!t) continue;
    auto fv = free_type_vars(t);
    avoid.insert(fv.begin(), fv.end());
  }
  if (!avoid.count(base)) return base;
  return fresh_name(base, avoid);
}

bool Checker::match2(const TypingEnv& env, const types::Match& a,
                     const types::Match& b) {
  if (a.cases.size() != b.cases.size()) return false;
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    if (!alpha_equal(a.cases[i].pattern, b.cases[i].pattern)) return false;
  }
  if (!sub(env, a.scrutinee, b.scrutinee)) return false;
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    if (!sub(env, a.cases[i].continuation, b.cases[i].continuation)) {
      return false;
    }
  }
  return true;
}

TypePtr Checker::step_once(const TypingEnv& env, const TypePtr& t) {
  if (const auto* a = t->as<types::App>()) {
    TypePtr fn = whnf(env, a->fn);
    const auto* f = fn->as<types::Forall>();
    if (f == nullptr || !sub(env, a->arg, f->bound)) return nullptr;
    burn();
    return subst_type_in_type(f->body, f->var, a->arg);
  }
  if (const auto* m = t->as<types::Match>()) {
    auto k = reduce_index(env, m->scrutinee, m->cases);
    if (!k) return nullptr;
    burn();
    return m->cases[*k].continuation;
  }
  return nullptr;
}

std::vector<TypePtr> Checker::match_forms(const TypingEnv& env,
                                          const TypePtr& t) {
  std::vector<TypePtr> out;
  TypePtr cur = t;
  for (int i = 0; i < kMaxDepth && cur; ++i) {
    if (cur->is<types::Match>()) out.push_back(cur);
    cur = step_once(env, cur);
  }
  return out;
}

bool Checker::sub(const TypingEnv& env, const TypePtr& a0, const TypePtr& b0) {
  Scope scope(*this);
  if (a0 == b0 || alpha_equal(a0, b0)) return true;
  if (b0->is<types::Top>()) return true;
  auto computes = [](const TypePtr& t) {
    return t->is<types::Match>() || t->is<types::App>();
  };
  if (computes(a0) && computes(b0)) {
    // A match type equals each of its reducts, so compare them at every stage.
    auto as = match_forms(env, a0);
    auto bs = match_forms(env, b0);
    for (const auto& ma : as) {
      for (const auto& mb : bs) {
        if (match2(env, *ma->as<types::Match>(), *mb->as<types::Match>())) {
          return true;
        }
      }
    }
  }
  TypePtr a = whnf(env, a0);
  TypePtr b = whnf(env, b0);
  if (a != a0 || b != b0) {
    if (alpha_equal(a, b) || b->is<types::Top>()) return true;
  }
  if (a->is<types::Union>()) {
    for (const auto& alt : union_alternatives(a)) {
      if (!sub(env, alt, b)) return false;
    }
    return true;
  }
  if (const auto* s = a->as<types::Singleton>()) {
    return mem(env, s->value, b) == Tri::kYes;
  }
  if (b->is<types::Union>()) {
    for (const auto& alt : union_alternatives(b)) {
      if (sub(env, a, alt)) return true;
    }
  }
  if (const auto* v = a->as<types::Var>()) {
    const Binding* bound = env.lookup_type(v->name);
    return bound != nullptr && sub(env, bound->type, b);
  }
  return structural(env, a, b);
}

bool Checker::structural(const TypingEnv& env, const TypePtr& a,
                         const TypePtr& b) {
  if (a->node.index() != b->node.index()) return false;
  if (const auto* x = a->as<types::Basic>()) {
    return x->kind == b->as<types::Basic>()->kind;
  }
  if (const auto* x = a->as<types::List>()) {
    return sub(env, x->element, b->as<types::List>()->element);
  }
  if (const auto* x = a->as<types::Record>()) {
    const auto& yf = b->as<types::Record>()->fields;
    if (x->fields.size() != yf.size()) return false;
    for (const auto& f : x->fields) {
      auto it = std::find_if(yf.begin(), yf.end(), [&](const TypeField& g) {
        return g.label == f.label;
      });
      if (it == yf.end() || !sub(env, f.type, it->type)) return false;
    }
    return true;
  }
  if (const auto* x = a->as<types::Arrow>()) {
    const auto* y = b->as<types::Arrow>();
    return sub(env, y->from, x->from) && sub(env, x->to, y->to);
  }
  if (const auto* x = a->as<types::Forall>()) {
    const auto* y = b->as<types::Forall>();
    if (!sub(env, y->bound, x->bound)) return false;
    std::string z = fresh_tvar(env, x->var, {a, b});
    TypingEnv inner = env.with_type(z, y->bound);
    return sub(inner, subst_type_in_type(x->body, x->var, type_var(z)),
               subst_type_in_type(y->body, y->var, type_var(z)));
  }
  if (const auto* x = a->as<types::ServerRef>()) {
    const auto* y = b->as<types::ServerRef>();
    return equiv(env, x->matches, y->matches) &&
           equiv(env, x->actions, y->actions) &&
           equiv(env, x->params, y->params);
  }
  if (const auto* x = a->as<types::Chan>()) {
    const auto* y = b->as<types::Chan>();
    return equiv(env, x->matches, y->matches) &&
           equiv(env, x->actions, y->actions) &&
           equiv(env, x->params, y->params);
  }
  if (const auto* x = a->as<types::Match>()) {
    return match2(env, *x, *b->as<types::Match>());
  }
  return false;
}

Tri Checker::mem(const TypingEnv& env, const GroundValue& v, const TypePtr& t0) {
  Scope scope(*this);
  TypePtr t = whnf(env, t0);
  auto all = [](std::initializer_list<Tri> rs) {
    bool unknown = false;
    for (Tri r : rs) {
      if (r == Tri::kNo) return Tri::kNo;
      if (r == Tri::kUnknown) unknown = true;
    }
    return unknown ? Tri::kUnknown : Tri::kYes;
  };
  return std::visit(
      [&](const auto& n) -> Tri {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, types::Top>) {
          return Tri::kYes;
        } else if constexpr (std::is_same_v<T, types::Union>) {
          Tri l = mem(env, v, n.left);
          if (l == Tri::kYes) return Tri::kYes;
          Tri r = mem(env, v, n.right);
          if (r == Tri::kYes) return Tri::kYes;
          return (l == Tri::kNo && r == Tri::kNo) ? Tri::kNo : Tri::kUnknown;
        } else if constexpr (std::is_same_v<T, types::Singleton>) {
          return v == n.value ? Tri::kYes : Tri::kNo;
        } else if constexpr (std::is_same_v<T, types::Basic>) {
          bool ok = false;
          switch (n.kind) {
            case BasicKind::kInt:
              ok = v.is<GroundValue::Int>();
              break;
            case BasicKind::kBool:
              ok = v.is<GroundValue::Bool>();
              break;
            case BasicKind::kString:
              ok = v.is<GroundValue::Str>();
              break;
            case BasicKind::kUnit:
              ok = v.is<GroundValue::Unit>();
              break;
            case BasicKind::kBytes:
              ok = v.is<GroundValue::Bytes>();
              break;
          }
          return ok ? Tri::kYes : Tri::kNo;
        } else if constexpr (std::is_same_v<T, types::List>) {
          const auto* l = v.get_if<GroundValue::List>();
          if (!l) return Tri::kNo;
          Tri acc = Tri::kYes;
          for (const auto& item : l->items) {
            Tri r = mem(env, item, n.element);
            if (r == Tri::kNo) return Tri::kNo;
            if (r == Tri::kUnknown) acc = Tri::kUnknown;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, types::Record>) {
          if (!v.is<GroundValue::Record>()) return Tri::kNo;
          Tri acc = Tri::kYes;
          for (const auto& f : n.fields) {
            const GroundValue* fv = v.field(f.label);
            if (!fv) return Tri::kNo;
            Tri r = mem(env, *fv, f.type);
            if (r == Tri::kNo) return Tri::kNo;
            if (r == Tri::kUnknown) acc = Tri::kUnknown;
          }
          return acc;
        } else if constexpr (std::is_same_v<T, types::ServerRef>) {
          const auto* a = v.get_if<GroundValue::Address>();
          if (!a) return Tri::kNo;
          return all({equiv(env, a->matches, n.matches) ? Tri::kYes : Tri::kNo,
                      equiv(env, a->actions, n.actions) ? Tri::kYes : Tri::kNo,
                      equiv(env, a->params, n.params) ? Tri::kYes : Tri::kNo});
        } else if constexpr (std::is_same_v<T, types::Chan>) {
          const auto* c = v.get_if<GroundValue::Channel>();
          if (!c) return Tri::kNo;
          return all({equiv(env, c->matches, n.matches) ? Tri::kYes : Tri::kNo,
                      equiv(env, c->actions, n.actions) ? Tri::kYes : Tri::kNo,
                      equiv(env, c->params, n.params) ? Tri::kYes : Tri::kNo});
        } else if constexpr (std::is_same_v<T, types::Arrow> ||
                             std::is_same_v<T, types::Forall>) {
          return Tri::kNo;
        } else {
          // Type variables and irreducible applications or match types.
          return Tri::kUnknown;
        }
      },
      t->node);
}

bool Checker::dis(const TypingEnv& env, const TypePtr& a0, const TypePtr& b0) {
  Scope scope(*this);
  TypePtr a = whnf(env, a0);
  TypePtr b = whnf(env, b0);
  if (a->is<types::Union>()) {
    for (const auto& alt : union_alternatives(a)) {
      if (!dis(env, alt, b)) return false;
    }
    return true;
  }
  if (b->is<types::Union>()) {
    for (const auto& alt : union_alternatives(b)) {
      if (!dis(env, a, alt)) return false;
    }
    return true;
  }
  auto opaque = [](const TypePtr& t) {
    return t->is<types::Top>() || t->is<types::Var>() || t->is<types::App>() ||
           t->is<types::Match>();
  };
  if (opaque(a) || opaque(b)) return false;
  const auto* sa = a->as<types::Singleton>();
  const auto* sb = b->as<types::Singleton>();
  if (sa && sb) return sa->value != sb->value;
  if (sa) return mem(env, sa->value, b) == Tri::kNo;
  if (sb) return mem(env, sb->value, a) == Tri::kNo;
  if (a->node.index() != b->node.index()) return true;
  if (const auto* x = a->as<types::Basic>()) {
    return x->kind != b->as<types::Basic>()->kind;
  }
  if (const auto* x = a->as<types::Record>()) {
    for (const auto& f : x->fields) {
      for (const auto& g : b->as<types::Record>()->fields) {
        if (f.label == g.label && dis(env, f.type, g.type)) return true;
      }
    }
  }
  return false;
}

TypePtr Checker::normalize(const TypingEnv& env, const TypePtr& t0) {
  Scope scope(*this);
  TypePtr t = whnf(env, t0);
  auto self = [&](const TypePtr& c) { return normalize(env, c); };
  return std::visit(
      [&](const auto& n) -> TypePtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, types::ServerRef>) {
          return server_ref_type(self(n.matches), self(n.actions),
                                 self(n.params));
        } else if constexpr (std::is_same_v<T, types::Chan>) {
          return chan_type(self(n.matches), self(n.actions), self(n.params));
        } else if constexpr (std::is_same_v<T, types::Record>) {
          std::vector<TypeField> fields;
          for (const auto& f : n.fields) fields.push_back({f.label, self(f.type)});
          return record_type(std::move(fields));
        } else if constexpr (std::is_same_v<T, types::List>) {
          return list_type(self(n.element));
        } else if constexpr (std::is_same_v<T, types::Arrow>) {
          return arrow_type(self(n.from), self(n.to));
        } else if constexpr (std::is_same_v<T, types::Union>) {
          return union_type(self(n.left), self(n.right));
        } else if constexpr (std::is_same_v<T, types::Forall>) {
          TypePtr bound = self(n.bound);
          std::string z = fresh_tvar(env, n.var, {});
          TypePtr body = z == n.var
                             ? n.body
                             : subst_type_in_type(n.body, n.var, type_var(z));
          return forall_type(z, bound, normalize(env.with_type(z, bound), body));
        } else if constexpr (std::is_same_v<T, types::App>) {
          return type_app(self(n.fn), self(n.arg));
        } else if constexpr (std::is_same_v<T, types::Match>) {
          std::vector<MatchTypeCase> cases;
          for (const auto& c : n.cases) {
            cases.push_back({self(c.pattern), self(c.continuation)});
          }
          return match_type(self(n.scrutinee), std::move(cases));
        } else {
          return t;
        }
      },
      t->node);
}

bool Checker::valid(const TypingEnv& env, const TypePtr& t) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, types::Top> ||
                      std::is_same_v<T, types::Basic> ||
                      std::is_same_v<T, types::Singleton>) {
          return true;
        } else if constexpr (std::is_same_v<T, types::Var>) {
          return env.lookup_type(n.name) != nullptr;
        } else if constexpr (std::is_same_v<T, types::ServerRef> ||
                             std::is_same_v<T, types::Chan>) {
          return valid(env, n.matches) && valid(env, n.actions) &&
                 valid(env, n.params);
        } else if constexpr (std::is_same_v<T, types::Record>) {
          return std::all_of(n.fields.begin(), n.fields.end(),
                             [&](const TypeField& f) { return valid(env, f.type); });
        } else if constexpr (std::is_same_v<T, types::List>) {
          return valid(env, n.element);
        } else if constexpr (std::is_same_v<T, types::Arrow>) {
          return valid(env, n.from) && valid(env, n.to);
        } else if constexpr (std::is_same_v<T, types::Union>) {
          return valid(env, n.left) && valid(env, n.right);
        } else if constexpr (std::is_same_v<T, types::Forall>) {
          if (!valid(env, n.bound)) return false;
          std::string z = fresh_tvar(env, n.var, {});
          TypePtr body = z == n.var
                             ? n.body
                             : subst_type_in_type(n.body, n.var, type_var(z));
          return valid(env.with_type(z, n.bound), body);
        } else if constexpr (std::is_same_v<T, types::Match>) {
          if (!valid(env, n.scrutinee)) return false;
          for (const auto& c : n.cases) {
            if (!valid(env, c.pattern) || !valid(env, c.continuation)) {
              return false;
            }
          }
          return true;
        } else {
          static_assert(std::is_same_v<T, types::App>);
          if (!valid(env, n.fn) || !valid(env, n.arg)) return false;
          TypePtr head = whnf(env, n.fn);
          if (head->template is<types::Var>()) head = expose(env, head);
          if (const auto* f = head->template as<types::Forall>()) {
            return sub(env, n.arg, f->bound);
          }
          // Type variables without a polymorphic bound and stuck
          // computations stand for type operators; they are accepted when
          // their parts are valid.
          return n.fn->template is<types::Var>() ||
                 head->template is<types::Top>() ||
                 head->template is<types::App>() ||
                 head->template is<types::Match>();
        }
      },
      t->node);
}

bool Checker::env_ok(const TypingEnv& env) {
  TypingEnv prefix;
  std::set<std::string> seen;
  for (const auto& b : env.bindings()) {
    if (!seen.insert(b.name).second) return false;
    if (!b.type || !valid(prefix, b.type)) return false;
    prefix = b.kind == Binding::Kind::kTerm ? prefix.with_term(b.name, b.type)
                                            : prefix.with_type(b.name, b.type);
  }
  return true;
}

// Type of field `label` in a record type or a record singleton; null if the
// field is absent or `c` is not record-shaped.
TypePtr Checker::field_view(const TypePtr& c, const std::string& label) {
  if (const auto* r = c->as<types::Record>()) {
    for (const auto& f : r->fields) {
      if (f.label == label) return f.type;
    }
    return nullptr;
  }
  if (const auto* s = c->as<types::Singleton>()) {
    if (const GroundValue* fv = s->value.field(label)) {
      return singleton_type(*fv);
    }
  }
  return nullptr;
}

void Checker::check_entity(const TypingEnv& env, const TypePtr& entity_type,
                           const TypePtr& tm, const TypePtr& ta,
                           const TypePtr& tp, SourceLoc loc) {
  TypePtr whole = expose(env, entity_type);
  for (const auto& alt : union_alternatives(whole)) {
    TypePtr c = expose(env, alt);
    bool record_like =
        c->is<types::Record>() ||
        (c->is<types::Singleton>() &&
         c->as<types::Singleton>()->value.is<GroundValue::Record>());
    if (!record_like) {
      throw TypeError(TypeErrorKind::kNotSubtype,
                      "P4 entity argument must be a record", loc,
                      sugar::p4entity(tm, ta, tp, type_var("Xn"),
                                      type_var("Xa")),
                      c);
    }
    for (const char* label : kEntityFields) {
      if (!field_view(c, label)) {
        throw TypeError(TypeErrorKind::kFieldMissing,
                        std::string("entity field '") + label + "' is missing",
                        loc, nullptr, c, label);
      }
    }
    TypePtr xn = field_view(c, "name");
    TypePtr xa = field_view(c, "action");
    if (auto pats = lookup_patterns(tm)) {
      TypePtr names = union_of(*pats);
      if (!sub(env, xn, names)) {
        throw TypeError(TypeErrorKind::kNotSubtype,
                        "unknown table name in entity field 'name'", loc,
                        names, xn, "name");
      }
    }
    TypePtr action_bound = type_app(ta, xn);
    if (!sub(env, xa, action_bound)) {
      TypePtr expected = action_bound;
      try {
        expected = normalize(env, action_bound);
      } catch (const TypeError&) {
      }
      throw TypeError(TypeErrorKind::kNotSubtype,
                      "invalid action for the table in entity field 'action'",
                      loc, expected, xa, "action");
    }
    TypePtr target = sugar::p4entity(tm, ta, tp, xn, xa);
    if (sub(env, c, target)) continue;
    TypePtr shape = whnf(env, target);
    if (shape->is<types::Record>()) {
      for (const char* label : kEntityFields) {
        TypePtr have = field_view(c, label);
        TypePtr want = field_view(shape, label);
        if (want && !sub(env, have, want)) {
          TypePtr expected = want;
          try {
            expected = normalize(env, want);
          } catch (const TypeError&) {
          }
          throw TypeError(TypeErrorKind::kNotSubtype,
                          std::string("entity field '") + label +
                              "' does not fit the channel configuration",
                          loc, expected, have, label);
        }
      }
    }
    throw TypeError(TypeErrorKind::kNotSubtype,
                    "entity does not fit the channel configuration", loc,
                    shape, c);
  }
}

TypePtr Checker::read_element(const TypingEnv& env, const TypePtr& query_type,
                              const TypePtr& tm, const TypePtr& ta,
                              const TypePtr& tp) {
  std::vector<TypePtr> out;
  auto add = [&](TypePtr t) {
    for (const auto& e : out) {
      if (alpha_equal(e, t)) return;
    }
    out.push_back(std::move(t));
  };
  auto pats = lookup_patterns(tm);
  for (const auto& alt : union_alternatives(expose(env, query_type))) {
    TypePtr c = expose(env, alt);
    TypePtr xn = field_view(c, "name");
    TypePtr xa = field_view(c, "action");
    std::size_t before = out.size();
    if (pats) {
      for (const auto& p : *pats) {
        const std::string* table = singleton_string(p);
        if (!table || *table == "*") continue;
        const std::string* qn = singleton_string(xn);
        if (!(qn && *qn == "*") && !sub(env, p, xn)) continue;
        TypePtr acts = whnf(env, type_app(ta, p));
        for (const auto& a : union_alternatives(acts)) {
          const std::string* action = singleton_string(a);
          if (!action || *action == "*") continue;
          const std::string* qa = singleton_string(xa);
          if (!(qa && *qa == "*") && !sub(env, a, xa)) continue;
          add(sugar::p4entity(tm, ta, tp, p, a));
        }
      }
    }
    if (out.size() == before) add(sugar::p4entity(tm, ta, tp, xn, xa));
  }
  return union_of(out);
}

TypePtr Checker::synth_list_op(const TypingEnv& env, const TermPtr& t,
                               const TypePtr& list_ty, bool is_head) {
  std::vector<TypePtr> results;
  for (const auto& alt : union_alternatives(expose(env, list_ty))) {
    TypePtr c = expose(env, alt);
    if (const auto* s = c->as<types::Singleton>()) {
      if (const auto* l = s->value.get_if<GroundValue::List>()) {
        if (l->items.empty()) {
          results.push_back(singleton_type(
              GroundValue::record({{"none", GroundValue::unit()}})));
        } else if (is_head) {
          results.push_back(
              singleton_type(GroundValue::record({{"some", l->items.front()}})));
        } else {
          std::vector<GroundValue> rest(l->items.begin() + 1, l->items.end());
          results.push_back(singleton_type(GroundValue::record(
              {{"some", GroundValue::list(std::move(rest))}})));
        }
        continue;
      }
    }
    if (const auto* l = c->as<types::List>()) {
      results.push_back(sugar::option(is_head ? l->element : c));
      continue;
    }
    throw TypeError(TypeErrorKind::kNotSubtype,
                    std::string(is_head ? "head" : "tail") +
                        " expects a list",
                    t->loc, list_type(top_type()), list_ty);
  }
  return union_of(results);
}

TypePtr Checker::synth(const TypingEnv& env, const TermPtr& t) {
  if (auto g = to_ground(t)) return singleton_type(std::move(*g));
  const SourceLoc loc = t->loc;
  auto require = [&](const TypePtr& actual, const TypePtr& expected,
                     const std::string& what) {
    if (!sub(env, actual, expected)) {
      throw TypeError(TypeErrorKind::kNotSubtype, what, loc, expected, actual);
    }
  };
  auto require_valid = [&](const TypingEnv& e, const TypePtr& ty) {
    if (!valid(e, ty)) {
      throw TypeError(TypeErrorKind::kInvalidType,
                      "type " + print_type(ty) + " is not valid here", loc);
    }
  };
  return std::visit(
      [&](const auto& n) -> TypePtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, terms::Literal> ||
                      std::is_same_v<T, terms::Nil>) {
          // Always ground; handled above.
          return nullptr;
        } else if constexpr (std::is_same_v<T, terms::Var>) {
          const Binding* b = env.lookup_term(n.name);
          if (!b) {
            throw TypeError(TypeErrorKind::kUnknownVariable,
                            "unknown variable '" + n.name + "'", loc);
          }
          return b->type;
        } else if constexpr (std::is_same_v<T, terms::Cons>) {
          TypePtr th = synth(env, n.head);
          TypePtr tt = synth(env, n.tail);
          std::vector<TypePtr> elems;
          bool ok = true;
          for (const auto& alt : union_alternatives(expose(env, tt))) {
            TypePtr c = expose(env, alt);
            if (const auto* s = c->as<types::Singleton>()) {
              if (const auto* l = s->value.get_if<GroundValue::List>()) {
                for (const auto& item : l->items) {
                  elems.push_back(singleton_type(item));
                }
                continue;
              }
            }
            if (const auto* l = c->as<types::List>()) {
              elems.push_back(l->element);
              continue;
            }
            ok = false;
          }
          if (!ok) {
            throw TypeError(TypeErrorKind::kNotSubtype,
                            "the tail of '::' must be a list", loc,
                            list_type(th), tt);
          }
          if (elems.empty()) return list_type(th);
          TypePtr l = union_of(elems);
          if (sub(env, th, l)) return list_type(l);
          return list_type(union_type(l, th));
        } else if constexpr (std::is_same_v<T, terms::Head>) {
          return synth_list_op(env, t, synth(env, n.list), true);
        } else if constexpr (std::is_same_v<T, terms::Tail>) {
          return synth_list_op(env, t, synth(env, n.list), false);
        } else if constexpr (std::is_same_v<T, terms::Record>) {
          std::vector<TypeField> fields;
          for (const auto& f : n.fields) {
            fields.push_back({f.label, synth(env, f.value)});
          }
          return record_type(std::move(fields));
        } else if constexpr (std::is_same_v<T, terms::Field>) {
          TypePtr tr = synth(env, n.record);
          std::vector<TypePtr> results;
          for (const auto& alt : union_alternatives(expose(env, tr))) {
            TypePtr f = field_view(expose(env, alt), n.label);
            if (!f) {
              throw TypeError(TypeErrorKind::kFieldMissing,
                              "field '" + n.label + "' is missing", loc,
                              nullptr, tr, n.label);
            }
            results.push_back(f);
          }
          return union_of(results);
        } else if constexpr (std::is_same_v<T, terms::App>) {
          TypePtr tf = synth(env, n.fn);
          TypePtr fe = expose(env, tf);
          const auto* arrow = fe->template as<types::Arrow>();
          if (!arrow) {
            throw TypeError(TypeErrorKind::kNotSubtype,
                            "applied term is not a function", loc,
                            arrow_type(top_type(), top_type()), tf);
          }
          TypePtr ta = synth(env, n.arg);
          require(ta, arrow->from, "argument does not fit the parameter type");
          return arrow->to;
        } else if constexpr (std::is_same_v<T, terms::TypeApp>) {
          TypePtr tf = synth(env, n.fn);
          TypePtr fe = expose(env, tf);
          const auto* all = fe->template as<types::Forall>();
          if (!all) {
            throw TypeError(TypeErrorKind::kNotSubtype,
                            "type-applied term is not polymorphic", loc,
                            forall_type("X", top_type(), type_var("X")), tf);
          }
          require_valid(env, n.arg);
          require(n.arg, all->bound, "type argument exceeds its bound");
          return type_app(fe, n.arg);
        } else if constexpr (std::is_same_v<T, terms::Lambda>) {
          require_valid(env, n.param_type);
          std::string x = n.param;
          TermPtr body = n.body;
          if (env.binds(x)) {
            std::set<std::string> avoid = env_names(env);
            auto fv = free_term_vars(body);
            avoid.insert(fv.begin(), fv.end());
            x = fresh_name(x, avoid);
            body = rename_term_var(body, n.param, x);
          }
          return arrow_type(n.param_type,
                            synth(env.with_term(x, n.param_type), body));
        } else if constexpr (std::is_same_v<T, terms::TypeLambda>) {
          require_valid(env, n.bound);
          std::string x = n.var;
          TermPtr body = n.body;
          if (env.binds(x)) {
            x = fresh_tvar(env, x, {});
            body = subst_type_in_term(body, n.var, type_var(x));
          }
          return forall_type(x, n.bound, synth(env.with_type(x, n.bound), body));
        } else if constexpr (std::is_same_v<T, terms::Let>) {
          TypePtr t0 = synth(env, n.bound);
          std::string x = n.var;
          TermPtr body = n.body;
          if (env.binds(x)) {
            std::set<std::string> avoid = env_names(env);
            auto fv = free_term_vars(body);
            avoid.insert(fv.begin(), fv.end());
            x = fresh_name(x, avoid);
            body = rename_term_var(body, n.var, x);
          }
          return synth(env.with_term(x, t0), body);
        } else if constexpr (std::is_same_v<T, terms::Match>) {
          TypePtr ts = synth(env, n.scrutinee);
          std::vector<MatchTypeCase> cases;
          std::vector<TypePtr> patterns;
          for (const auto& c : n.cases) {
            require_valid(env, c.type);
            std::string x = c.var;
            TermPtr body = c.body;
            if (env.binds(x)) {
              std::set<std::string> avoid = env_names(env);
              auto fv = free_term_vars(body);
              avoid.insert(fv.begin(), fv.end());
              x = fresh_name(x, avoid);
              body = rename_term_var(body, c.var, x);
            }
            cases.push_back({c.type, synth(env.with_term(x, c.type), body)});
            patterns.push_back(c.type);
          }
          TypePtr all = union_of(patterns);
          if (!sub(env, ts, all)) {
            throw TypeError(TypeErrorKind::kNotExhaustive,
                            "pattern matching is not exhaustive", loc, all, ts);
          }
          return match_type(ts, std::move(cases));
        } else {
          static_assert(std::is_same_v<T, terms::Op>);
          if (n.kind == OpKind::kConnect) {
            TypePtr ta = synth(env, n.args[0]);
            TypePtr e = expose(env, ta);
            if (const auto* s = e->template as<types::Singleton>()) {
              if (const auto* a = s->value.template get_if<GroundValue::Address>()) {
                return chan_type(a->matches, a->actions, a->params);
              }
            }
            if (const auto* r = e->template as<types::ServerRef>()) {
              return chan_type(r->matches, r->actions, r->params);
            }
            throw TypeError(TypeErrorKind::kOpArgMismatch,
                            "Connect expects a server address", loc,
                            server_ref_type(type_var("Tm"), type_var("Ta"),
                                            type_var("Tp")),
                            ta);
          }
          TypePtr tc = synth(env, n.args[0]);
          // A union of channel types is accepted; the entity must then fit
          // every configuration.
          std::vector<std::array<TypePtr, 3>> configs;
          for (const auto& alt : union_alternatives(expose(env, tc))) {
            TypePtr ce = expose(env, alt);
            if (const auto* s = ce->template as<types::Singleton>()) {
              if (const auto* ch = s->value.template get_if<GroundValue::Channel>()) {
                configs.push_back({ch->matches, ch->actions, ch->params});
                continue;
              }
            } else if (const auto* ch = ce->template as<types::Chan>()) {
              configs.push_back({ch->matches, ch->actions, ch->params});
              continue;
            }
            throw TypeError(TypeErrorKind::kOpArgMismatch,
                            std::string(op_name(n.kind)) +
                                " expects a channel as its first argument",
                            loc,
                            chan_type(type_var("Tm"), type_var("Ta"),
                                      type_var("Tp")),
                            tc);
          }
          TypePtr te = synth(env, n.args[1]);
          const SourceLoc eloc = n.args[1]->loc.line > 0 ? n.args[1]->loc : loc;
          std::vector<TypePtr> elems;
          for (const auto& [tm, ta, tp] : configs) {
            check_entity(env, te, tm, ta, tp, eloc);
            if (n.kind == OpKind::kRead) {
              elems.push_back(read_element(env, te, tm, ta, tp));
            }
          }
          if (n.kind == OpKind::kRead) return list_type(union_of(elems));
          return bool_type();
        }
      },
      t->node);
}

}  // namespace

bool env_valid(const TypingEnv& env, const TypingOptions& opts) {
  try {
    return Checker(opts).env_ok(env);
  } catch (const TypeError&) {
    return false;
  }
}

bool type_valid(const TypingEnv& env, const TypePtr& t,
                const TypingOptions& opts) {
  try {
    return Checker(opts).valid(env, t);
  } catch (const TypeError&) {
    return false;
  }
}

bool member_of(const GroundValue& v, const TypePtr& t,
               const TypingOptions& opts) {
  return Checker(opts).mem(TypingEnv{}, v, t) == Tri::kYes;
}

TypePtr normalize_type(const TypingEnv& env, const TypePtr& t,
                       const TypingOptions& opts) {
  return Checker(opts).normalize(env, t);
}

bool subtype(const TypingEnv& env, const TypePtr& a, const TypePtr& b,
             const TypingOptions& opts) {
  return Checker(opts).sub(env, a, b);
}

bool disjoint(const TypingEnv& env, const TypePtr& a, const TypePtr& b,
              const TypingOptions& opts) {
  return Checker(opts).dis(env, a, b);
}

std::optional<std::size_t> match_case_index(const TypingEnv& env,
                                            const TypePtr& t,
                                            const TypingOptions& opts) {
  Checker c(opts);
  TypePtr cur = t;
  if (const auto* a = cur->as<types::App>()) {
    TypePtr fn = c.whnf(env, a->fn);
    if (const auto* f = fn->as<types::Forall>()) {
      if (c.sub(env, a->arg, f->bound)) {
        cur = subst_type_in_type(f->body, f->var, a->arg);
      }
    }
  }
  const auto* m = cur->as<types::Match>();
  if (!m) return std::nullopt;
  return c.reduce_index(env, m->scrutinee, m->cases);
}

TypePtr typecheck(const TypingEnv& env, const TermPtr& t,
                  const TypingOptions& opts) {
  Checker c(opts);
  if (!c.env_ok(env)) {
    throw TypeError(TypeErrorKind::kInvalidEnv, "typing environment is invalid");
  }
  return c.synth(env, t);
}

void check_entity_type(const TypingEnv& env, const TypePtr& entity_type,
                       const TypePtr& tm, const TypePtr& ta, const TypePtr& tp,
                       const TypingOptions& opts, SourceLoc loc) {
  Checker(opts).check_entity(env, entity_type, tm, ta, tp, loc);
}

TypePtr read_result_element(const TypingEnv& env, const TypePtr& query_type,
                            const TypePtr& tm, const TypePtr& ta,
                            const TypePtr& tp, const TypingOptions& opts) {
  return Checker(opts).read_element(env, query_type, tm, ta, tp);
}

}  // namespace fp4r
