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

#ifndef FP4R_SYNTAX_H_
#define FP4R_SYNTAX_H_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fp4r/term.h"
#include "fp4r/type.h"

namespace fp4r {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Type abbreviations introduced by `type Name = T;` declarations, already
// expanded.
using TypeAliases = std::map<std::string, TypePtr, std::less<>>;

struct Program {
  TypeAliases aliases;
  TermPtr term;  // null for a declarations-only file
};

// A program is a sequence of `type Name = T;` declarations followed by an
// optional term. `aliases` are visible to the declarations and the term.
Program parse_program(std::string_view text, const TypeAliases& aliases = {});
TermPtr parse_term(std::string_view text, const TypeAliases& aliases = {});
TypePtr parse_type(std::string_view text, const TypeAliases& aliases = {});

std::string print_type(const TypePtr& t);
std::string print_term(const TermPtr& t);
std::string print_ground(const GroundValue& v);
std::string print_label(const std::string& label);

}  // namespace fp4r

#endif  // FP4R_SYNTAX_H_
