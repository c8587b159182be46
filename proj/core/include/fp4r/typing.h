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

#ifndef FP4R_TYPING_H_
#define FP4R_TYPING_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp4r/ground_value.h"
#include "fp4r/term.h"
#include "fp4r/type.h"

namespace fp4r {

struct Binding {
  enum class Kind { kTerm, kType };
  Kind kind;
  std::string name;
  TypePtr type;  // the term's type, or the type variable's upper bound
};

// Ordered sequence of term and type variable bindings. Extension returns a
// new environment; lookups search from the most recent binding.
class TypingEnv {
 public:
  TypingEnv() = default;

  TypingEnv with_term(std::string name, TypePtr type) const;
  TypingEnv with_type(std::string name, TypePtr bound) const;

  const Binding* lookup_term(const std::string& name) const;
  const Binding* lookup_type(const std::string& name) const;
  bool binds(const std::string& name) const;

  const std::vector<Binding>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }

 private:
  std::vector<Binding> bindings_;
};

enum class TypeErrorKind {
  kInvalidEnv,
  kInvalidType,
  kNotSubtype,
  kNotExhaustive,
  kNoMatchCase,
  kUnknownVariable,
  kFieldMissing,
  kOpArgMismatch,
  kFuelExhausted,
};

const char* type_error_kind_name(TypeErrorKind kind);

class TypeError : public std::runtime_error {
 public:
  TypeError(TypeErrorKind kind, std::string message, SourceLoc loc = {},
            TypePtr expected = nullptr, TypePtr actual = nullptr,
            std::string path = {});

  TypeErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }
  SourceLoc location() const { return loc_; }
  const TypePtr& expected() const { return expected_; }
  const TypePtr& actual() const { return actual_; }
  // Field path inside an entity argument ("action", "matches", ...), if any.
  const std::string& path() const { return path_; }

  // One-line rendering with the expected/actual types, if known.
  std::string render() const;

 private:
  TypeErrorKind kind_;
  std::string message_;
  SourceLoc loc_;
  TypePtr expected_;
  TypePtr actual_;
  std::string path_;
};

struct TypingOptions {
  // Maximum number of type-level rewrites (applications and match
  // reductions) per top-level query.
  int fuel = 512;
};

bool env_valid(const TypingEnv& env, const TypingOptions& opts = {});
bool type_valid(const TypingEnv& env, const TypePtr& t,
                const TypingOptions& opts = {});

// v ∈ T. `t` is normalized first.
bool member_of(const GroundValue& v, const TypePtr& t,
               const TypingOptions& opts = {});

// Head-reduces applications and match types everywhere inside `t`.
// Throws TypeError(kFuelExhausted) when the budget runs out.
TypePtr normalize_type(const TypingEnv& env, const TypePtr& t,
                       const TypingOptions& opts = {});

bool subtype(const TypingEnv& env, const TypePtr& a, const TypePtr& b,
             const TypingOptions& opts = {});

// Conservative: true only when no common subtype can exist.
bool disjoint(const TypingEnv& env, const TypePtr& a, const TypePtr& b,
              const TypingOptions& opts = {});

// Index of the case a match type reduces to, or nullopt if it does not
// reduce. `t` must be a match type (possibly under an application).
std::optional<std::size_t> match_case_index(const TypingEnv& env,
                                            const TypePtr& t,
                                            const TypingOptions& opts = {});

// Synthesizes the minimal type of `t`. Throws TypeError.
TypePtr typecheck(const TypingEnv& env, const TermPtr& t,
                  const TypingOptions& opts = {});

void check_entity_type(const TypingEnv& env, const TypePtr& entity_type,
                       const TypePtr& tm, const TypePtr& ta, const TypePtr& tp,
                       const TypingOptions& opts = {}, SourceLoc loc = {});

// Result element type of a read on a channel of type Chan[Tm, Ta, Tp] with
// a query of type `query_type`.
TypePtr read_result_element(const TypingEnv& env, const TypePtr& query_type,
                            const TypePtr& tm, const TypePtr& ta,
                            const TypePtr& tp, const TypingOptions& opts = {});

}  // namespace fp4r

#endif  // FP4R_TYPING_H_
