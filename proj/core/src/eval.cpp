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

#include "fp4r/eval.h"

#include <utility>

#include "fp4r/subst.h"
#include "fp4r/syntax.h"
#include "fp4r/typing.h"

namespace fp4r {

const char* eval_error_kind_name(EvalError::Kind kind) {
  switch (kind) {
    case EvalError::Kind::kStuck:
      return "stuck";
    case EvalError::Kind::kMatchNoCase:
      return "match-no-case";
    case EvalError::Kind::kFuelExhausted:
      return "fuel-exhausted";
  }
  return "?";
}

namespace {

using Plug = std::function<TermPtr(TermPtr)>;

[[noreturn]] void stuck(const TermPtr& t, const std::string& why) {
  throw EvalError(EvalError::Kind::kStuck, why + ": " + print_term(t));
}

PendingStep tau(TermPtr next) {
  PendingStep s;
  s.kind = PendingStep::Kind::kTau;
  s.term = std::move(next);
  return s;
}

// Steps `sub` and wraps the result into the context `plug`.
PendingStep inside(const TermPtr& sub, const Plug& plug) {
  PendingStep s = step(sub);
  switch (s.kind) {
    case PendingStep::Kind::kDone:
      stuck(sub, "value in evaluation position");
    case PendingStep::Kind::kTau:
      s.term = plug(s.term);
      return s;
    case PendingStep::Kind::kRequest: {
      auto inner = std::move(s.resume);
      s.resume = [inner, plug](const GroundValue& r) { return plug(inner(r)); };
      return s;
    }
  }
  return s;
}

TermPtr with_loc(Term::Node node, SourceLoc loc) {
  return make_term(std::move(node), loc);
}

TermPtr option_some(TermPtr v) { return record({{"some", std::move(v)}}); }
TermPtr option_none() { return record({{"none", unit_lit()}}); }

const GroundValue* literal_value(const TermPtr& t) {
  if (const auto* l = t->as<terms::Literal>()) return &l->value;
  return nullptr;
}

PendingStep step_op(const TermPtr& t, const terms::Op& n) {
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    if (is_value(n.args[i])) continue;
    return inside(n.args[i], [t, n, i](TermPtr a) {
      terms::Op copy = n;
      copy.args[i] = std::move(a);
      return with_loc(std::move(copy), t->loc);
    });
  }
  PendingStep s;
  s.kind = PendingStep::Kind::kRequest;
  s.op = n.kind;
  const GroundValue* target = literal_value(n.args[0]);
  if (n.kind == OpKind::kConnect) {
    if (!target || !target->is<GroundValue::Address>()) {
      stuck(t, "Connect on a non-address");
    }
    s.target = *target;
  } else {
    if (!target || !target->is<GroundValue::Channel>()) {
      stuck(t, std::string(op_name(n.kind)) + " on a non-channel");
    }
    s.target = *target;
    auto payload = to_ground(n.args[1]);
    if (!payload) stuck(t, "non-ground entity argument");
    s.payload = std::move(*payload);
  }
  s.resume = [](const GroundValue& r) { return from_ground(r); };
  return s;
}

}  // namespace

std::optional<std::size_t> select_case(const TermPtr& v,
                                       const std::vector<MatchCase>& cases) {
  auto g = to_ground(v);
  TypePtr vt;
  if (!g) {
    try {
      vt = typecheck(TypingEnv{}, v);
    } catch (const TypeError&) {
      return std::nullopt;
    }
  }
  for (std::size_t k = 0; k < cases.size(); ++k) {
    bool in = g ? member_of(*g, cases[k].type)
                : subtype(TypingEnv{}, vt, cases[k].type);
    if (in) return k;
  }
  return std::nullopt;
}

PendingStep step(const TermPtr& t) {
  if (is_value(t)) {
    PendingStep s;
    s.term = t;
    return s;
  }
  const SourceLoc loc = t->loc;
  return std::visit(
      [&](const auto& n) -> PendingStep {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, terms::Literal> ||
                      std::is_same_v<T, terms::Nil> ||
                      std::is_same_v<T, terms::Lambda> ||
                      std::is_same_v<T, terms::TypeLambda>) {
          stuck(t, "unexpected value form");
        } else if constexpr (std::is_same_v<T, terms::Var>) {
          stuck(t, "free variable");
        } else if constexpr (std::is_same_v<T, terms::Cons>) {
          if (!is_value(n.head)) {
            return inside(n.head, [n, loc](TermPtr h) {
              return with_loc(terms::Cons{std::move(h), n.tail}, loc);
            });
          }
          return inside(n.tail, [n, loc](TermPtr tl) {
            return with_loc(terms::Cons{n.head, std::move(tl)}, loc);
          });
        } else if constexpr (std::is_same_v<T, terms::Head> ||
                             std::is_same_v<T, terms::Tail>) {
          constexpr bool kHead = std::is_same_v<T, terms::Head>;
          if (!is_value(n.list)) {
            return inside(n.list,
                          [loc](TermPtr l) { return with_loc(T{std::move(l)}, loc); });
          }
          if (n.list->template is<terms::Nil>()) return tau(option_none());
          if (const auto* c = n.list->template as<terms::Cons>()) {
            return tau(option_some(kHead ? c->head : c->tail));
          }
          stuck(t, kHead ? "head of a non-list" : "tail of a non-list");
        } else if constexpr (std::is_same_v<T, terms::Record>) {
          for (std::size_t i = 0; i < n.fields.size(); ++i) {
            if (is_value(n.fields[i].value)) continue;
            return inside(n.fields[i].value, [n, i, loc](TermPtr v) {
              terms::Record copy = n;
              copy.fields[i].value = std::move(v);
              return with_loc(std::move(copy), loc);
            });
          }
          stuck(t, "record");
        } else if constexpr (std::is_same_v<T, terms::Field>) {
          if (!is_value(n.record)) {
            return inside(n.record, [n, loc](TermPtr r) {
              return with_loc(terms::Field{std::move(r), n.label}, loc);
            });
          }
          if (const auto* r = n.record->template as<terms::Record>()) {
            for (const auto& f : r->fields) {
              if (f.label == n.label) return tau(f.value);
            }
          }
          stuck(t, "missing field '" + n.label + "'");
        } else if constexpr (std::is_same_v<T, terms::App>) {
          if (!is_value(n.fn)) {
            return inside(n.fn, [n, loc](TermPtr f) {
              return with_loc(terms::App{std::move(f), n.arg}, loc);
            });
          }
          if (!is_value(n.arg)) {
            return inside(n.arg, [n, loc](TermPtr a) {
              return with_loc(terms::App{n.fn, std::move(a)}, loc);
            });
          }
          const auto* lam = n.fn->template as<terms::Lambda>();
          if (!lam) stuck(t, "application of a non-function");
          return tau(subst_term(lam->body, lam->param, n.arg));
        } else if constexpr (std::is_same_v<T, terms::TypeApp>) {
          if (!is_value(n.fn)) {
            return inside(n.fn, [n, loc](TermPtr f) {
              return with_loc(terms::TypeApp{std::move(f), n.arg}, loc);
            });
          }
          const auto* tl = n.fn->template as<terms::TypeLambda>();
          if (!tl) stuck(t, "type application of a non-polymorphic term");
          return tau(subst_type_in_term(tl->body, tl->var, n.arg));
        } else if constexpr (std::is_same_v<T, terms::Let>) {
          if (!is_value(n.bound)) {
            return inside(n.bound, [n, loc](TermPtr b) {
              return with_loc(terms::Let{n.var, std::move(b), n.body}, loc);
            });
          }
          return tau(subst_term(n.body, n.var, n.bound));
        } else if constexpr (std::is_same_v<T, terms::Match>) {
          if (!is_value(n.scrutinee)) {
            return inside(n.scrutinee, [n, loc](TermPtr s) {
              return with_loc(terms::Match{std::move(s), n.cases}, loc);
            });
          }
          auto k = select_case(n.scrutinee, n.cases);
          if (!k) {
            throw EvalError(EvalError::Kind::kMatchNoCase,
                            "no case matches " + print_term(n.scrutinee));
          }
          const MatchCase& c = n.cases[*k];
          return tau(subst_term(c.body, c.var, n.scrutinee));
        } else {
          static_assert(std::is_same_v<T, terms::Op>);
          return step_op(t, n);
        }
      },
      t->node);
}

TermPtr run_tau(const TermPtr& t, std::size_t fuel) {
  TermPtr cur = t;
  for (;;) {
    PendingStep s = step(cur);
    if (s.kind != PendingStep::Kind::kTau) return cur;
    if (fuel == 0) {
      throw EvalError(EvalError::Kind::kFuelExhausted,
                      "evaluation did not finish within the step budget");
    }
    --fuel;
    cur = std::move(s.term);
  }
}

}  // namespace fp4r
