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

#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "fp4r/sugar.h"
#include "fp4r/syntax.h"

namespace fp4r {
namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return s != "b";
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\x%02x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out += "\"";
  return out;
}

// Type precedence levels, loosest first.
enum TyPrec { kTyArrow = 0, kTyUnion = 1, kTyMatch = 2, kTyApp = 3, kTyAtom = 4 };

class TypePrinter {
 public:
  std::string print(const TypePtr& t, int prec) {
    std::ostringstream os;
    emit(os, t, prec);
    return os.str();
  }

  void emit(std::ostringstream& os, const TypePtr& t, int prec);

  std::string ground(const GroundValue& v, bool in_list_head);

 private:
  bool shadowed(const std::string& name) const {
    return bound_.count(name) > 0;
  }
  std::multiset<std::string> bound_;
};

std::string TypePrinter::ground(const GroundValue& v, bool in_list_head) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, GroundValue::Unit>) {
          return "()";
        } else if constexpr (std::is_same_v<T, GroundValue::Int>) {
          return std::to_string(n.value);
        } else if constexpr (std::is_same_v<T, GroundValue::Bool>) {
          return n.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, GroundValue::Str>) {
          return quote(n.value);
        } else if constexpr (std::is_same_v<T, GroundValue::Bytes>) {
          std::string out = "b(";
          for (std::size_t i = 0; i < n.octets.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(n.octets[i]);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, GroundValue::Address> ||
                             std::is_same_v<T, GroundValue::Channel>) {
          std::string out =
              std::is_same_v<T, GroundValue::Address> ? "addr(" : "chan(";
          if constexpr (std::is_same_v<T, GroundValue::Address>) {
            out += quote(n.name);
          } else {
            out += quote(n.id);
          }
          for (const TypePtr* ty : {&n.matches, &n.actions, &n.params}) {
            out += ", " + print(*ty, kTyArrow);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, GroundValue::List>) {
          if (n.items.empty()) return "nil";
          std::string out;
          for (const auto& item : n.items) out += ground(item, true) + " :: ";
          out += "nil";
          return in_list_head ? "(" + out + ")" : out;
        } else {
          static_assert(std::is_same_v<T, GroundValue::Record>);
          std::string out = "{";
          for (std::size_t i = 0; i < n.fields.size(); ++i) {
            if (i) out += ", ";
            out += print_label(n.fields[i].first) + " = " +
                   ground(n.fields[i].second, false);
          }
          return out + "}";
        }
      },
      v.node());
}

void TypePrinter::emit(std::ostringstream& os, const TypePtr& t, int prec) {
  auto paren = [&](int mine, auto&& body) {
    bool p = mine < prec;
    if (p) os << "(";
    body();
    if (p) os << ")";
  };
  if (t->is<types::Forall>()) {
    if (auto name = sugar::name_of(t); name && !shadowed(*name)) {
      os << *name;
      return;
    }
  }
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, types::Top>) {
          os << "Top";
        } else if constexpr (std::is_same_v<T, types::Basic>) {
          os << basic_kind_name(n.kind);
        } else if constexpr (std::is_same_v<T, types::ServerRef> ||
                             std::is_same_v<T, types::Chan>) {
          os << (std::is_same_v<T, types::ServerRef> ? "ServerRef[" : "Chan[");
          emit(os, n.matches, kTyArrow);
          os << ", ";
          emit(os, n.actions, kTyArrow);
          os << ", ";
          emit(os, n.params, kTyArrow);
          os << "]";
        } else if constexpr (std::is_same_v<T, types::Record>) {
          os << "{";
          for (std::size_t i = 0; i < n.fields.size(); ++i) {
            if (i) os << ", ";
            os << print_label(n.fields[i].label) << ": ";
            emit(os, n.fields[i].type, kTyArrow);
          }
          os << "}";
        } else if constexpr (std::is_same_v<T, types::List>) {
          os << "[";
          emit(os, n.element, kTyArrow);
          os << "]";
        } else if constexpr (std::is_same_v<T, types::Arrow>) {
          paren(kTyArrow, [&] {
            emit(os, n.from, kTyUnion);
            os << " -> ";
            emit(os, n.to, kTyArrow);
          });
        } else if constexpr (std::is_same_v<T, types::Var>) {
          os << n.name;
        } else if constexpr (std::is_same_v<T, types::Forall>) {
          paren(kTyArrow, [&] {
            os << "forall " << n.var;
            if (!n.bound->template is<types::Top>()) {
              os << " <: ";
              emit(os, n.bound, kTyUnion);
            }
            os << ". ";
            bound_.insert(n.var);
            emit(os, n.body, kTyArrow);
            bound_.erase(bound_.find(n.var));
          });
        } else if constexpr (std::is_same_v<T, types::App>) {
          paren(kTyApp, [&] {
            emit(os, n.fn, kTyApp);
            os << " ";
            emit(os, n.arg, kTyAtom);
          });
        } else if constexpr (std::is_same_v<T, types::Union>) {
          paren(kTyUnion, [&] {
            emit(os, n.left, kTyUnion);
            os << " | ";
            emit(os, n.right, kTyMatch);
          });
        } else if constexpr (std::is_same_v<T, types::Singleton>) {
          if (const auto* s = n.value.template get_if<GroundValue::Str>()) {
            os << quote(s->value);
          } else {
            os << "'" << ground(n.value, true);
          }
        } else {
          static_assert(std::is_same_v<T, types::Match>);
          paren(kTyMatch, [&] {
            emit(os, n.scrutinee, kTyMatch);
            os << " match {";
            for (std::size_t i = 0; i < n.cases.size(); ++i) {
              os << (i ? ", " : " ");
              emit(os, n.cases[i].pattern, kTyArrow);
              os << " => ";
              emit(os, n.cases[i].continuation, kTyArrow);
            }
            os << " }";
          });
        }
      },
      t->node);
}

// Term precedence levels, loosest first.
enum TmPrec {
  kTmBinder = 0,
  kTmCons = 1,
  kTmMatch = 2,
  kTmApp = 3,
  kTmPrefix = 4,
  kTmPostfix = 5,
};

class TermPrinter {
 public:
  void emit(std::ostringstream& os, const TermPtr& t, int prec);

 private:
  std::string ty(const TypePtr& t) { return types_.print(t, kTyArrow); }
  TypePrinter types_;
};

void TermPrinter::emit(std::ostringstream& os, const TermPtr& t, int prec) {
  auto paren = [&](int mine, auto&& body) {
    bool p = mine < prec;
    if (p) os << "(";
    body();
    if (p) os << ")";
  };
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, terms::Literal>) {
          os << types_.ground(n.value, true);
        } else if constexpr (std::is_same_v<T, terms::Nil>) {
          os << "nil";
          if (n.annotation) os << "[" << ty(n.annotation) << "]";
        } else if constexpr (std::is_same_v<T, terms::Var>) {
          os << n.name;
        } else if constexpr (std::is_same_v<T, terms::Cons>) {
          paren(kTmCons, [&] {
            emit(os, n.head, kTmMatch);
            os << " :: ";
            emit(os, n.tail, kTmCons);
          });
        } else if constexpr (std::is_same_v<T, terms::Head> ||
                             std::is_same_v<T, terms::Tail>) {
          paren(kTmPrefix, [&] {
            os << (std::is_same_v<T, terms::Head> ? "head " : "tail ");
            emit(os, n.list, kTmPrefix);
          });
        } else if constexpr (std::is_same_v<T, terms::Record>) {
          os << "{";
          for (std::size_t i = 0; i < n.fields.size(); ++i) {
            if (i) os << ", ";
            os << print_label(n.fields[i].label) << " = ";
            emit(os, n.fields[i].value, kTmBinder);
          }
          os << "}";
        } else if constexpr (std::is_same_v<T, terms::Field>) {
          emit(os, n.record, kTmPostfix);
          os << "." << print_label(n.label);
        } else if constexpr (std::is_same_v<T, terms::App>) {
          paren(kTmApp, [&] {
            emit(os, n.fn, kTmApp);
            os << " ";
            emit(os, n.arg, kTmPostfix);
          });
        } else if constexpr (std::is_same_v<T, terms::TypeApp>) {
          paren(kTmApp, [&] {
            // A bare nil followed by `[` would read back as an annotation.
            const auto* inner = n.fn->template as<terms::App>();
            if (n.fn->template is<terms::Nil>() ||
                (inner && inner->arg->template is<terms::Nil>() &&
                 !inner->arg->template as<terms::Nil>()->annotation)) {
              os << "(";
              emit(os, n.fn, kTmBinder);
              os << ")";
            } else {
              emit(os, n.fn, kTmApp);
            }
            os << " [" << ty(n.arg) << "]";
          });
        } else if constexpr (std::is_same_v<T, terms::Lambda>) {
          paren(kTmBinder, [&] {
            os << "fun(" << n.param << ": " << ty(n.param_type) << ") ";
            emit(os, n.body, kTmBinder);
          });
        } else if constexpr (std::is_same_v<T, terms::TypeLambda>) {
          paren(kTmBinder, [&] {
            os << "Fun(" << n.var;
            if (!n.bound->template is<types::Top>()) {
              os << " <: " << ty(n.bound);
            }
            os << ") ";
            emit(os, n.body, kTmBinder);
          });
        } else if constexpr (std::is_same_v<T, terms::Let>) {
          paren(kTmBinder, [&] {
            os << "let " << n.var << " = ";
            emit(os, n.bound, kTmBinder);
            os << " in ";
            emit(os, n.body, kTmBinder);
          });
        } else if constexpr (std::is_same_v<T, terms::Match>) {
          paren(kTmMatch, [&] {
            emit(os, n.scrutinee, kTmMatch);
            os << " match {";
            for (std::size_t i = 0; i < n.cases.size(); ++i) {
              os << (i ? ", " : " ") << n.cases[i].var << ": "
                 << ty(n.cases[i].type) << " => ";
              emit(os, n.cases[i].body, kTmBinder);
            }
            os << " }";
          });
        } else {
          static_assert(std::is_same_v<T, terms::Op>);
          os << op_name(n.kind) << "(";
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) os << ", ";
            emit(os, n.args[i], kTmBinder);
          }
          os << ")";
        }
      },
      t->node);
}

}  // namespace

std::string print_label(const std::string& label) {
  return is_identifier(label) ? label : quote(label);
}

std::string print_type(const TypePtr& t) {
  return TypePrinter().print(t, kTyArrow);
}

std::string print_term(const TermPtr& t) {
  std::ostringstream os;
  TermPrinter().emit(os, t, kTmBinder);
  return os.str();
}

std::string print_ground(const GroundValue& v) {
  return TypePrinter().ground(v, false);
}

}  // namespace fp4r
