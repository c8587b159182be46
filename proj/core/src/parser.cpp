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
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fp4r/sugar.h"
#include "fp4r/syntax.h"

namespace fp4r {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { kIdent, kInt, kString, kBytesOpen, kPunct, kEnd };

struct Token {
  Tok kind;
  std::string text;  // identifier, punctuation, or decoded string
  std::int64_t number = 0;
  SourceLoc loc;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourceLoc loc{line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back({Tok::kEnd, "", 0, loc});
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          advance();
        }
        std::string word(src_.substr(start, pos_ - start));
        if (word == "b" && pos_ < src_.size() && src_[pos_] == '(') {
          advance();
          out.push_back({Tok::kBytesOpen, "b(", 0, loc});
        } else {
          out.push_back({Tok::kIdent, std::move(word), 0, loc});
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        out.push_back(lex_int(loc));
      } else if (c == '"') {
        out.push_back(lex_string(loc));
      } else {
        out.push_back(lex_punct(loc));
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token lex_int(SourceLoc loc) {
    bool negative = false;
    if (src_[pos_] == '-') {
      negative = true;
      advance();
    }
    // Accumulate as a negative number so that INT64_MIN is representable.
    std::int64_t value = 0;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      int d = src_[pos_] - '0';
      if (value < (std::numeric_limits<std::int64_t>::min() + d) / 10) {
        throw ParseError("integer literal out of range", loc.line, loc.column);
      }
      value = value * 10 - d;
      advance();
    }
    if (!negative) {
      if (value == std::numeric_limits<std::int64_t>::min()) {
        throw ParseError("integer literal out of range", loc.line, loc.column);
      }
      value = -value;
    }
    return {Tok::kInt, "", value, loc};
  }

  Token lex_string(SourceLoc loc) {
    advance();
    std::string out;
    for (;;) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        throw ParseError("unterminated string literal", loc.line, loc.column);
      }
      char c = src_[pos_];
      advance();
      if (c == '"') break;
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (pos_ >= src_.size()) {
        throw ParseError("unterminated string literal", loc.line, loc.column);
      }
      char e = src_[pos_];
      advance();
      switch (e) {
        case 'n':
          out.push_back('\n');
          break;
        case 't':
          out.push_back('\t');
          break;
        case 'r':
          out.push_back('\r');
          break;
        case '\\':
        case '"':
          out.push_back(e);
          break;
        case 'x': {
          int v = 0;
          for (int i = 0; i < 2; ++i) {
            if (pos_ >= src_.size() ||
                !std::isxdigit(static_cast<unsigned char>(src_[pos_]))) {
              throw ParseError("bad \\x escape", line_, col_);
            }
            char h = src_[pos_];
            v = v * 16 + (std::isdigit(static_cast<unsigned char>(h))
                              ? h - '0'
                              : std::tolower(h) - 'a' + 10);
            advance();
          }
          out.push_back(static_cast<char>(v));
          break;
        }
        default:
          throw ParseError(std::string("unknown escape \\") + e, line_, col_);
      }
    }
    return {Tok::kString, std::move(out), 0, loc};
  }

  Token lex_punct(SourceLoc loc) {
    static const char* const kTwo[] = {"::", "=>", "->", "<:"};
    for (const char* p : kTwo) {
      if (src_.substr(pos_, 2) == p) {
        advance();
        advance();
        return {Tok::kPunct, p, 0, loc};
      }
    }
    char c = src_[pos_];
    if (std::string_view("(){}[],:;=|.'").find(c) == std::string_view::npos) {
      throw ParseError(std::string("unexpected character '") + c + "'",
                       loc.line, loc.column);
    }
    advance();
    return {Tok::kPunct, std::string(1, c), 0, loc};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_reserved(const std::string& w) {
  static const char* const kWords[] = {
      "fun",     "Fun",    "let",    "in",     "match",  "nil",
      "head",    "tail",   "true",   "false",  "forall", "type",
      "addr",    "chan",   "Connect", "Read",  "Insert", "Modify",
      "Delete",  "Top",    "Int",    "Bool",   "String", "Unit",
      "Bytes",   "ServerRef", "Chan"};
  for (const char* k : kWords) {
    if (w == k) return true;
  }
  return false;
}

std::optional<OpKind> op_kind(const std::string& w) {
  if (w == "Connect") return OpKind::kConnect;
  if (w == "Read") return OpKind::kRead;
  if (w == "Insert") return OpKind::kInsert;
  if (w == "Modify") return OpKind::kModify;
  if (w == "Delete") return OpKind::kDelete;
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::string_view text, const TypeAliases& aliases)
      : toks_(Lexer(text).run()), aliases_(aliases) {}

  Program program() {
    Program p;
    while (peek_ident("type")) {
      next();
      Token name = expect_ident();
      if (is_reserved(name.text)) {
        fail("reserved word '" + name.text + "' cannot name a type", name);
      }
      if (aliases_.count(name.text)) {
        fail("type '" + name.text + "' is already defined", name);
      }
      expect("=");
      TypePtr t = type();
      expect(";");
      aliases_[name.text] = t;
      p.aliases[name.text] = t;
    }
    if (!at_end()) {
      p.term = term();
      accept(";");
    }
    expect_end();
    return p;
  }

  TermPtr whole_term() {
    TermPtr t = term();
    expect_end();
    return t;
  }

  TypePtr whole_type() {
    TypePtr t = type();
    expect_end();
    return t;
  }

 private:
  // ---- token helpers ----
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::kEnd; }
  bool peek_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::kPunct && peek(ahead).text == p;
  }
  bool peek_ident(std::string_view w, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::kIdent && peek(ahead).text == w;
  }
  bool accept(std::string_view p) {
    if (peek_punct(p)) {
      next();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.loc.line, at.loc.column);
  }
  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::kEnd:
        return "end of input";
      case Tok::kString:
        return "string literal";
      case Tok::kInt:
        return "integer literal";
      case Tok::kBytesOpen:
        return "'b('";
      default:
        return "'" + t.text + "'";
    }
  }
  void expect(std::string_view p) {
    if (!accept(p)) {
      fail("expected '" + std::string(p) + "' but found " + describe(peek()),
           peek());
    }
  }
  void expect_keyword(std::string_view w) {
    if (!peek_ident(w)) {
      fail("expected '" + std::string(w) + "' but found " + describe(peek()),
           peek());
    }
    next();
  }
  Token expect_ident() {
    if (peek().kind != Tok::kIdent) {
      fail("expected identifier but found " + describe(peek()), peek());
    }
    return next();
  }
  std::string binder_name() {
    Token t = expect_ident();
    if (is_reserved(t.text)) fail("reserved word '" + t.text + "'", t);
    return t.text;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected " + describe(peek()), peek());
  }
  std::string label() {
    if (peek().kind == Tok::kIdent || peek().kind == Tok::kString) {
      return next().text;
    }
    fail("expected a field label but found " + describe(peek()), peek());
  }

  static TermPtr at(const TermPtr& t, SourceLoc loc) {
    return make_term(t->node, loc);
  }

  // ---- terms ----
  TermPtr term() {
    const Token& start = peek();
    SourceLoc loc = start.loc;
    if (peek_ident("fun")) {
      next();
      expect("(");
      std::string x = binder_name();
      expect(":");
      TypePtr ty = type();
      expect(")");
      return at(lambda(x, ty, term()), loc);
    }
    if (peek_ident("Fun")) {
      next();
      expect("(");
      std::string x = binder_name();
      TypePtr bound = top_type();
      if (accept("<:")) bound = type();
      expect(")");
      bound_tvars_.push_back(x);
      TermPtr body = term();
      bound_tvars_.pop_back();
      return at(type_lambda(x, bound, body), loc);
    }
    if (peek_ident("let")) {
      next();
      std::string x = binder_name();
      expect("=");
      TermPtr bound = term();
      expect_keyword("in");
      return at(let(x, bound, term()), loc);
    }
    TermPtr left = match_term();
    if (peek_punct("::")) {
      SourceLoc op_loc = next().loc;
      TermPtr right = term_cons_tail();
      return at(cons(left, right), op_loc);
    }
    return left;
  }

  // Right operand of `::`, which may itself be a binder form.
  TermPtr term_cons_tail() { return term(); }

  TermPtr match_term() {
    TermPtr t = app_term();
    while (peek_ident("match")) {
      const Token& kw = next();
      expect("{");
      std::vector<MatchCase> cases;
      if (!peek_punct("}")) {
        do {
          std::string x = binder_name();
          expect(":");
          TypePtr ty = type();
          expect("=>");
          TermPtr body = term();
          cases.push_back({x, ty, body});
        } while (accept(","));
      }
      expect("}");
      if (cases.empty()) fail("match with no cases", kw);
      t = at(match(t, std::move(cases)), kw.loc);
    }
    return t;
  }

  bool starts_postfix() const {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kInt:
      case Tok::kString:
      case Tok::kBytesOpen:
        return true;
      case Tok::kPunct:
        return t.text == "(" || t.text == "{";
      case Tok::kIdent:
        if (t.text == "head" || t.text == "tail" || t.text == "match" ||
            t.text == "in" || t.text == "fun" || t.text == "Fun" ||
            t.text == "let" || t.text == "type") {
          return false;
        }
        return true;
      default:
        return false;
    }
  }

  TermPtr app_term() {
    TermPtr t = prefix_term();
    for (;;) {
      if (peek_punct("[")) {
        SourceLoc loc = next().loc;
        TypePtr ty = type();
        expect("]");
        t = at(type_app_term(t, ty), loc);
      } else if (starts_postfix()) {
        SourceLoc loc = peek().loc;
        t = at(app(t, postfix_term()), loc);
      } else {
        return t;
      }
    }
  }

  TermPtr prefix_term() {
    if (peek_ident("head") || peek_ident("tail")) {
      const Token& kw = next();
      bool is_head = kw.text == "head";
      TermPtr arg = prefix_term();
      return at(is_head ? head(arg) : tail(arg), kw.loc);
    }
    return postfix_term();
  }

  TermPtr postfix_term() {
    TermPtr t = atom();
    while (peek_punct(".")) {
      SourceLoc loc = next().loc;
      t = at(field(t, label()), loc);
    }
    return t;
  }

  std::vector<std::uint8_t> bytes_body() {
    std::vector<std::uint8_t> out;
    if (!peek_punct(")")) {
      do {
        const Token& t = peek();
        if (t.kind != Tok::kInt) fail("expected a byte value", t);
        if (t.number < 0 || t.number > 255) {
          fail("byte value out of range 0..255", t);
        }
        out.push_back(static_cast<std::uint8_t>(t.number));
        next();
      } while (accept(","));
    }
    expect(")");
    return out;
  }

  // addr("name", Tm, Ta, Tp) or addr("name", R) with R a ServerRef/Chan type.
  GroundValue server_value(bool is_address) {
    const Token& kw = next();
    expect("(");
    const Token& name = peek();
    if (name.kind != Tok::kString) fail("expected a quoted name", name);
    std::string id = next().text;
    expect(",");
    TypePtr first = type();
    TypePtr tm, ta, tp;
    if (accept(",")) {
      tm = first;
      ta = type();
      expect(",");
      tp = type();
    } else if (const auto* sr = first->as<types::ServerRef>()) {
      tm = sr->matches, ta = sr->actions, tp = sr->params;
    } else if (const auto* ch = first->as<types::Chan>()) {
      tm = ch->matches, ta = ch->actions, tp = ch->params;
    } else {
      fail("expected three type arguments or a ServerRef/Chan type", kw);
    }
    expect(")");
    return is_address ? GroundValue::address(id, tm, ta, tp)
                      : GroundValue::channel(id, tm, ta, tp);
  }

  TermPtr atom() {
    const Token& t = peek();
    SourceLoc loc = t.loc;
    switch (t.kind) {
      case Tok::kInt:
        next();
        return at(int_lit(t.number), loc);
      case Tok::kString: {
        std::string s = next().text;
        return at(string_lit(std::move(s)), loc);
      }
      case Tok::kBytesOpen:
        next();
        return at(bytes_lit(bytes_body()), loc);
      case Tok::kPunct:
        if (t.text == "(") {
          next();
          if (accept(")")) return at(unit_lit(), loc);
          TermPtr inner = term();
          expect(")");
          return inner;
        }
        if (t.text == "{") return record_term();
        break;
      case Tok::kIdent: {
        const std::string& w = t.text;
        if (w == "true" || w == "false") {
          next();
          return at(bool_lit(w == "true"), loc);
        }
        if (w == "nil") {
          next();
          TypePtr ann;
          if (accept("[")) {
            ann = type();
            expect("]");
          }
          return at(nil(ann), loc);
        }
        if (w == "addr" || w == "chan") {
          return at(literal(server_value(w == "addr")), loc);
        }
        if (auto kind = op_kind(w)) {
          next();
          expect("(");
          std::vector<TermPtr> args;
          if (!peek_punct(")")) {
            do {
              args.push_back(term());
            } while (accept(","));
          }
          expect(")");
          if (args.size() != op_arity(*kind)) {
            fail(std::string(op_name(*kind)) + " expects " +
                     std::to_string(op_arity(*kind)) + " argument(s)",
                 t);
          }
          return at(op(*kind, std::move(args)), loc);
        }
        if (is_reserved(w)) fail("unexpected '" + w + "'", t);
        next();
        return at(var(w), loc);
      }
      default:
        break;
    }
    fail("expected a term but found " + describe(t), t);
  }

  TermPtr record_term() {
    const Token& open = next();
    std::vector<RecordField> fields;
    bool named = peek_punct("}") ||
                 ((peek().kind == Tok::kIdent || peek().kind == Tok::kString) &&
                  peek_punct("=", 1));
    if (!peek_punct("}")) {
      if (named) {
        do {
          const Token& lt = peek();
          std::string l = label();
          expect("=");
          for (const auto& f : fields) {
            if (f.label == l) fail("duplicate record label '" + l + "'", lt);
          }
          fields.push_back({l, term()});
        } while (accept(","));
      } else {
        std::vector<TermPtr> items;
        do {
          items.push_back(term());
        } while (accept(","));
        if (items.size() != 4) {
          fail("positional records must have exactly four components "
               "(name, matches, action, params)",
               open);
        }
        static const char* const kLabels[] = {"name", "matches", "action",
                                              "params"};
        for (int i = 0; i < 4; ++i) fields.push_back({kLabels[i], items[i]});
      }
    }
    expect("}");
    return at(record(std::move(fields)), open.loc);
  }

  // ---- types ----
  TypePtr type() {
    if (peek_ident("forall")) {
      next();
      std::string x = binder_name();
      TypePtr bound = top_type();
      if (accept("<:")) bound = union_type_p();
      expect(".");
      bound_tvars_.push_back(x);
      TypePtr body = type();
      bound_tvars_.pop_back();
      return forall_type(x, bound, body);
    }
    TypePtr left = union_type_p();
    if (accept("->")) return arrow_type(left, type());
    return left;
  }

  TypePtr union_type_p() {
    TypePtr t = match_type_p();
    while (accept("|")) t = union_type(t, match_type_p());
    return t;
  }

  TypePtr match_type_p() {
    TypePtr t = app_type();
    while (peek_ident("match")) {
      const Token& kw = next();
      expect("{");
      std::vector<MatchTypeCase> cases;
      if (!peek_punct("}")) {
        do {
          TypePtr pat = type();
          expect("=>");
          TypePtr cont = type();
          cases.push_back({pat, cont});
        } while (accept(","));
      }
      expect("}");
      if (cases.empty()) fail("match type with no cases", kw);
      t = match_type(t, std::move(cases));
    }
    return t;
  }

  bool starts_atom_type() const {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kString:
        return true;
      case Tok::kPunct:
        return t.text == "(" || t.text == "{" || t.text == "[" ||
               t.text == "'";
      case Tok::kIdent:
        return t.text != "match" && t.text != "forall" && t.text != "in";
      default:
        return false;
    }
  }

  TypePtr app_type() {
    TypePtr t = atom_type();
    while (starts_atom_type()) t = type_app(t, atom_type());
    return t;
  }

  void type_triple(TypePtr& tm, TypePtr& ta, TypePtr& tp) {
    expect("[");
    tm = type();
    expect(",");
    ta = type();
    expect(",");
    tp = type();
    expect("]");
  }

  TypePtr atom_type() {
    const Token& t = peek();
    if (t.kind == Tok::kString) {
      std::string s = next().text;
      return string_singleton(std::move(s));
    }
    if (t.kind == Tok::kPunct) {
      if (t.text == "(") {
        next();
        TypePtr inner = type();
        expect(")");
        return inner;
      }
      if (t.text == "[") {
        next();
        TypePtr elem = type();
        expect("]");
        return list_type(elem);
      }
      if (t.text == "'") {
        next();
        return singleton_type(ground_singleton());
      }
      if (t.text == "{") {
        next();
        std::vector<TypeField> fields;
        if (!peek_punct("}")) {
          do {
            const Token& lt = peek();
            std::string l = label();
            expect(":");
            for (const auto& f : fields) {
              if (f.label == l) fail("duplicate record label '" + l + "'", lt);
            }
            fields.push_back({l, type()});
          } while (accept(","));
        }
        expect("}");
        return record_type(std::move(fields));
      }
    }
    if (t.kind == Tok::kIdent) {
      const std::string w = t.text;
      if (w == "Top") return next(), top_type();
      if (w == "Int") return next(), int_type();
      if (w == "Bool") return next(), bool_type();
      if (w == "String") return next(), string_type();
      if (w == "Unit") return next(), unit_type();
      if (w == "Bytes") return next(), bytes_type();
      if (w == "ServerRef" || w == "Chan") {
        next();
        TypePtr tm, ta, tp;
        type_triple(tm, ta, tp);
        return w == "ServerRef" ? server_ref_type(tm, ta, tp)
                                : chan_type(tm, ta, tp);
      }
      if (is_reserved(w)) fail("expected a type but found '" + w + "'", t);
      next();
      for (auto it = bound_tvars_.rbegin(); it != bound_tvars_.rend(); ++it) {
        if (*it == w) return type_var(w);
      }
      if (auto it = aliases_.find(w); it != aliases_.end()) return it->second;
      if (TypePtr s = sugar::lookup(w)) return s;
      return type_var(w);
    }
    fail("expected a type but found " + describe(t), t);
  }

  // Ground value after a singleton quote.
  GroundValue ground_singleton() {
    if (peek_punct("(")) {
      next();
      if (accept(")")) return GroundValue::unit();
      GroundValue v = ground_cons();
      expect(")");
      return v;
    }
    return ground_atom();
  }

  GroundValue ground_cons() {
    GroundValue first = ground_atom_or_paren();
    if (!peek_punct("::")) return first;
    std::vector<GroundValue> items{std::move(first)};
    while (accept("::")) {
      // A nil followed by another :: is an element, not the end of the list.
      if (peek_ident("nil") && !peek_punct("::", 1)) {
        next();
        if (accept("[")) {
          type();
          expect("]");
        }
        return GroundValue::list(std::move(items));
      }
      GroundValue item = ground_atom_or_paren();
      if (!peek_punct("::")) {
        const auto* tail_list = item.get_if<GroundValue::List>();
        if (tail_list == nullptr) fail("list must end with nil", peek());
        for (const auto& x : tail_list->items) items.push_back(x);
        return GroundValue::list(std::move(items));
      }
      items.push_back(std::move(item));
    }
    return GroundValue::list(std::move(items));
  }

  GroundValue ground_atom_or_paren() {
    if (peek_punct("(")) {
      next();
      if (accept(")")) return GroundValue::unit();
      GroundValue v = ground_cons();
      expect(")");
      return v;
    }
    return ground_atom();
  }

  GroundValue ground_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kInt:
        next();
        return GroundValue::integer(t.number);
      case Tok::kString: {
        std::string s = next().text;
        return GroundValue::string(std::move(s));
      }
      case Tok::kBytesOpen:
        next();
        return GroundValue::bytes(bytes_body());
      case Tok::kPunct:
        if (t.text == "{") {
          next();
          std::vector<std::pair<std::string, GroundValue>> fields;
          if (!peek_punct("}")) {
            do {
              const Token& lt = peek();
              std::string l = label();
              expect("=");
              for (const auto& f : fields) {
                if (f.first == l) {
                  fail("duplicate record label '" + l + "'", lt);
                }
              }
              fields.emplace_back(l, ground_cons());
            } while (accept(","));
          }
          expect("}");
          return GroundValue::record(std::move(fields));
        }
        break;
      case Tok::kIdent:
        if (t.text == "true" || t.text == "false") {
          next();
          return GroundValue::boolean(t.text == "true");
        }
        if (t.text == "nil") {
          next();
          if (accept("[")) {
            type();
            expect("]");
          }
          return GroundValue::nil();
        }
        if (t.text == "addr" || t.text == "chan") {
          return server_value(t.text == "addr");
        }
        break;
      default:
        break;
    }
    fail("expected a ground value but found " + describe(t), t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  TypeAliases aliases_;
  std::vector<std::string> bound_tvars_;
};

}  // namespace

Program parse_program(std::string_view text, const TypeAliases& aliases) {
  return Parser(text, aliases).program();
}

TermPtr parse_term(std::string_view text, const TypeAliases& aliases) {
  return Parser(text, aliases).whole_term();
}

TypePtr parse_type(std::string_view text, const TypeAliases& aliases) {
  return Parser(text, aliases).whole_type();
}

}  // namespace fp4r
