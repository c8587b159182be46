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

#ifndef FP4R_SUGAR_H_
#define FP4R_SUGAR_H_

#include <optional>
#include <string>

#include "fp4r/type.h"

namespace fp4r::sugar {

// forall A. {some: A} | {none: Unit}
TypePtr option_def();
// forall Tm Ta Tp Xn (Xa <: Ta Xn).
//   {name: Xn, matches: Tm Xn, action: Xa, params: Tp Xa}
TypePtr table_entry_def();
// Same binders, body `TableEntry Tm Ta Tp Xn Xa`. Table entries are the only
// entity kind modelled, so the union has a single member.
TypePtr p4entity_def();

TypePtr option(TypePtr a);
TypePtr table_entry(TypePtr tm, TypePtr ta, TypePtr tp, TypePtr xn,
                    TypePtr xa);
TypePtr p4entity(TypePtr tm, TypePtr ta, TypePtr tp, TypePtr xn, TypePtr xa);

// Built-in abbreviations known to the parser, looked up by name.
TypePtr lookup(const std::string& name);

// Name of the abbreviation `t` is alpha-equal to, if any.
std::optional<std::string> name_of(const TypePtr& t);

}  // namespace fp4r::sugar

#endif  // FP4R_SUGAR_H_
