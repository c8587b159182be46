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

#include "fp4r/type.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace fp4r {

namespace {

TypePtr make(Type::Node node) {
  return std::make_shared<const Type>(Type{std::move(node)});
}

}  // namespace

TypePtr top_type() {
  static const TypePtr t = make(types::Top{});
  return t;
}

TypePtr basic_type(BasicKind kind) {
  static const TypePtr kinds[] = {
      make(types::Basic{BasicKind::kInt}), make(types::Basic{BasicKind::kBool}),
      make(types::Basic{BasicKind::kString}),
      make(types::Basic{BasicKind::kUnit}),
      make(types::Basic{BasicKind::kBytes})};
  return kinds[static_cast<int>(kind)];
}

TypePtr int_type() { return basic_type(BasicKind::kInt); }
TypePtr bool_type() { return basic_type(BasicKind::kBool); }
TypePtr string_type() { return basic_type(BasicKind::kString); }
TypePtr unit_type() { return basic_type(BasicKind::kUnit); }
TypePtr bytes_type() { return basic_type(BasicKind::kBytes); }

TypePtr server_ref_type(TypePtr tm, TypePtr ta, TypePtr tp) {
  return make(types::ServerRef{std::move(tm), std::move(ta), std::move(tp)});
}

TypePtr chan_type(TypePtr tm, TypePtr ta, TypePtr tp) {
  return make(types::Chan{std::move(tm), std::move(ta), std::move(tp)});
}

TypePtr record_type(std::vector<TypeField> fields) {
  std::unordered_set<std::string> seen;
  for (const auto& f : fields) {
    if (!seen.insert(f.label).second) {
      throw std::invalid_argument("duplicate record label '" + f.label + "'");
    }
  }
  return make(types::Record{std::move(fields)});
}

TypePtr list_type(TypePtr element) {
  return make(types::List{std::move(element)});
}

TypePtr arrow_type(TypePtr from, TypePtr to) {
  return make(types::Arrow{std::move(from), std::move(to)});
}

TypePtr type_var(std::string name) { return make(types::Var{std::move(name)}); }

TypePtr forall_type(std::string var, TypePtr bound, TypePtr body) {
  if (!bound) bound = top_type();
  return make(types::Forall{std::move(var), std::move(bound), std::move(body)});
}

TypePtr type_app(TypePtr fn, TypePtr arg) {
  return make(types::App{std::move(fn), std::move(arg)});
}

TypePtr type_app(TypePtr fn, const std::vector<TypePtr>& args) {
  for (const auto& a : args) fn = type_app(std::move(fn), a);
  return fn;
}

TypePtr union_type(TypePtr left, TypePtr right) {
  return make(types::Union{std::move(left), std::move(right)});
}

TypePtr union_of(const std::vector<TypePtr>& alternatives) {
  if (alternatives.empty()) {
    throw std::invalid_argument("union of no alternatives");
  }
  TypePtr result = alternatives.front();
  for (std::size_t i = 1; i < alternatives.size(); ++i) {
    result = union_type(result, alternatives[i]);
  }
  return result;
}

TypePtr singleton_type(GroundValue value) {
  return make(types::Singleton{std::move(value)});
}

TypePtr string_singleton(std::string s) {
  return singleton_type(GroundValue::string(std::move(s)));
}

TypePtr match_type(TypePtr scrutinee, std::vector<MatchTypeCase> cases) {
  if (cases.empty()) throw std::invalid_argument("match type with no cases");
  return make(types::Match{std::move(scrutinee), std::move(cases)});
}

const char* basic_kind_name(BasicKind kind) {
  switch (kind) {
    case BasicKind::kInt:
      return "Int";
    case BasicKind::kBool:
      return "Bool";
    case BasicKind::kString:
      return "String";
    case BasicKind::kUnit:
      return "Unit";
    case BasicKind::kBytes:
      return "Bytes";
  }
  return "?";
}

std::vector<TypePtr> union_alternatives(const TypePtr& t) {
  std::vector<TypePtr> out;
  std::vector<TypePtr> stack{t};
  while (!stack.empty()) {
    TypePtr cur = stack.back();
    stack.pop_back();
    if (const auto* u = cur->as<types::Union>()) {
      stack.push_back(u->right);
      stack.push_back(u->left);
    } else {
      out.push_back(cur);
    }
  }
  return out;
}

namespace {

// Binder stacks for alpha-equivalence: a variable is identified by the depth
// of its innermost binder, or by name when free.
struct AlphaScope {
  std::vector<std::string> left, right;

  static long depth_of(const std::vector<std::string>& stack,
                       const std::string& name) {
    for (long i = static_cast<long>(stack.size()) - 1; i >= 0; --i) {
      if (stack[static_cast<std::size_t>(i)] == name) return i;
    }
    return -1;
  }
};

bool alpha_eq(const TypePtr& a, const TypePtr& b, AlphaScope& scope);

bool alpha_eq3(const TypePtr& a1, const TypePtr& a2, const TypePtr& a3,
               const TypePtr& b1, const TypePtr& b2, const TypePtr& b3,
               AlphaScope& scope) {
  return alpha_eq(a1, b1, scope) && alpha_eq(a2, b2, scope) &&
         alpha_eq(a3, b3, scope);
}

bool alpha_eq(const TypePtr& a, const TypePtr& b, AlphaScope& scope) {
  if (a == b && scope.left == scope.right) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = *b->as<T>();
        if constexpr (std::is_same_v<T, types::Top>) {
          return true;
        } else if constexpr (std::is_same_v<T, types::Basic>) {
          return x.kind == y.kind;
        } else if constexpr (std::is_same_v<T, types::ServerRef> ||
                             std::is_same_v<T, types::Chan>) {
          return alpha_eq3(x.matches, x.actions, x.params, y.matches,
                           y.actions, y.params, scope);
        } else if constexpr (std::is_same_v<T, types::Record>) {
          if (x.fields.size() != y.fields.size()) return false;
          for (const auto& f : x.fields) {
            const TypeField* match = nullptr;
            for (const auto& g : y.fields) {
              if (g.label == f.label) match = &g;
            }
            if (match == nullptr || !alpha_eq(f.type, match->type, scope)) {
              return false;
            }
          }
          return true;
        } else if constexpr (std::is_same_v<T, types::List>) {
          return alpha_eq(x.element, y.element, scope);
        } else if constexpr (std::is_same_v<T, types::Arrow>) {
          return alpha_eq(x.from, y.from, scope) && alpha_eq(x.to, y.to, scope);
        } else if constexpr (std::is_same_v<T, types::Var>) {
          long dx = AlphaScope::depth_of(scope.left, x.name);
          long dy = AlphaScope::depth_of(scope.right, y.name);
          if (dx != dy) return false;
          return dx >= 0 || x.name == y.name;
        } else if constexpr (std::is_same_v<T, types::Forall>) {
          if (!alpha_eq(x.bound, y.bound, scope)) return false;
          scope.left.push_back(x.var);
          scope.right.push_back(y.var);
          bool eq = alpha_eq(x.body, y.body, scope);
          scope.left.pop_back();
          scope.right.pop_back();
          return eq;
        } else if constexpr (std::is_same_v<T, types::App>) {
          return alpha_eq(x.fn, y.fn, scope) && alpha_eq(x.arg, y.arg, scope);
        } else if constexpr (std::is_same_v<T, types::Union>) {
          return alpha_eq(x.left, y.left, scope) &&
                 alpha_eq(x.right, y.right, scope);
        } else if constexpr (std::is_same_v<T, types::Singleton>) {
          return x.value == y.value;
        } else {
          static_assert(std::is_same_v<T, types::Match>);
          if (x.cases.size() != y.cases.size()) return false;
          if (!alpha_eq(x.scrutinee, y.scrutinee, scope)) return false;
          for (std::size_t i = 0; i < x.cases.size(); ++i) {
            if (!alpha_eq(x.cases[i].pattern, y.cases[i].pattern, scope) ||
                !alpha_eq(x.cases[i].continuation, y.cases[i].continuation,
                          scope)) {
              return false;
            }
          }
          return true;
        }
      },
      a->node);
}

void collect_ftv(const TypePtr& t, std::vector<std::string>& bound,
                 std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, types::ServerRef> ||
                      std::is_same_v<T, types::Chan>) {
          collect_ftv(x.matches, bound, out);
          collect_ftv(x.actions, bound, out);
          collect_ftv(x.params, bound, out);
        } else if constexpr (std::is_same_v<T, types::Record>) {
          for (const auto& f : x.fields) collect_ftv(f.type, bound, out);
        } else if constexpr (std::is_same_v<T, types::List>) {
          collect_ftv(x.element, bound, out);
        } else if constexpr (std::is_same_v<T, types::Arrow>) {
          collect_ftv(x.from, bound, out);
          collect_ftv(x.to, bound, out);
        } else if constexpr (std::is_same_v<T, types::Var>) {
          if (std::find(bound.begin(), bound.end(), x.name) == bound.end()) {
            out.insert(x.name);
          }
        } else if constexpr (std::is_same_v<T, types::Forall>) {
          collect_ftv(x.bound, bound, out);
          bound.push_back(x.var);
          collect_ftv(x.body, bound, out);
          bound.pop_back();
        } else if constexpr (std::is_same_v<T, types::App>) {
          collect_ftv(x.fn, bound, out);
          collect_ftv(x.arg, bound, out);
        } else if constexpr (std::is_same_v<T, types::Union>) {
          collect_ftv(x.left, bound, out);
          collect_ftv(x.right, bound, out);
        } else if constexpr (std::is_same_v<T, types::Match>) {
          collect_ftv(x.scrutinee, bound, out);
          for (const auto& c : x.cases) {
            collect_ftv(c.pattern, bound, out);
            collect_ftv(c.continuation, bound, out);
          }
        }
      },
      t->node);
}

}  // namespace

bool alpha_equal(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  AlphaScope scope;
  return alpha_eq(a, b, scope);
}

std::set<std::string> free_type_vars(const TypePtr& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  if (t) collect_ftv(t, bound, out);
  return out;
}

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid) {
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) {
    stem.pop_back();
  }
  if (stem.empty() || stem.back() != '_') stem += '_';
  for (int i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (avoid.count(candidate) == 0) return candidate;
  }
}

}  // namespace fp4r
