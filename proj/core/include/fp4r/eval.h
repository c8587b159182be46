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

#ifndef FP4R_EVAL_H_
#define FP4R_EVAL_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp4r/ground_value.h"
#include "fp4r/term.h"

namespace fp4r {

class EvalError : public std::runtime_error {
 public:
  enum class Kind { kStuck, kMatchNoCase, kFuelExhausted };

  EvalError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* eval_error_kind_name(EvalError::Kind kind);

// Outcome of one small step. A request is a P4Runtime operation waiting for
// the server's response; `resume` plugs the response into the hole of the
// evaluation context around the operation.
struct PendingStep {
  enum class Kind { kDone, kTau, kRequest };

  Kind kind = Kind::kDone;
  TermPtr term;  // the value (kDone) or the next term (kTau)
  OpKind op = OpKind::kConnect;
  GroundValue target;                  // server address or channel
  std::optional<GroundValue> payload;  // absent for Connect
  std::function<TermPtr(const GroundValue&)> resume;
};

PendingStep step(const TermPtr& t);

// Follows tau steps until `t` is a value or a pending request. Throws
// EvalError(kFuelExhausted) if more than `fuel` steps would be needed.
TermPtr run_tau(const TermPtr& t, std::size_t fuel);

// Index of the first case whose type contains the value `v`, skipping cases
// that do not contain it.
std::optional<std::size_t> select_case(const TermPtr& v,
                                       const std::vector<MatchCase>& cases);

}  // namespace fp4r

#endif  // FP4R_EVAL_H_
