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

#ifndef FP4R_SUBST_H_
#define FP4R_SUBST_H_

#include <string>

#include "fp4r/term.h"
#include "fp4r/type.h"

namespace fp4r {

// t[v / x]. `v` must be a value with no free term variables; throws
// std::invalid_argument otherwise. Ground values are left untouched and bound
// type variables are renamed when they would capture a free type variable of
// `v`.
TermPtr subst_term(const TermPtr& t, const std::string& x, const TermPtr& v);

// t[X -> T], capture-avoiding. Ground values are left untouched.
TermPtr subst_type_in_term(const TermPtr& t, const std::string& x,
                           const TypePtr& replacement);

// T0[X -> T], capture-avoiding. Singleton types are left untouched.
TypePtr subst_type_in_type(const TypePtr& t, const std::string& x,
                           const TypePtr& replacement);

// Renames a term variable; the new name must not occur in `t`.
TermPtr rename_term_var(const TermPtr& t, const std::string& from,
                        const std::string& to);

}  // namespace fp4r

#endif  // FP4R_SUBST_H_
