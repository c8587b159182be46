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

#ifndef FP4R_JSON_H_
#define FP4R_JSON_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fp4r/encoding.h"
#include "fp4r/ground_value.h"
#include "fp4r/network.h"
#include "fp4r/server.h"
#include "fp4r/type.h"

namespace fp4r {

class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ground values as JSON: null is (), arrays are lists, objects are records,
// {"$bytes": [..]} is a byte string, and {"$addr": name, "matches": T, ...}
// and {"$chan": id, ...} are addresses and channels with their types in
// surface syntax. `indent` < 0 prints on one line.
std::string ground_to_json(const GroundValue& v, int indent = -1);
GroundValue ground_from_json(std::string_view text);

// A JSON array of entity records.
std::string entities_to_json(const std::vector<Entity>& entities, int indent = 2);
std::vector<Entity> entities_from_json(std::string_view text);

// Canonical AST form, e.g. {"kind": "union", "left": .., "right": ..}.
std::string type_to_json(const TypePtr& t, int indent = 2);
std::string encoded_types_to_json(const EncodedTypes& enc, int indent = 2);

// Trace plus the final client terms and server states.
std::string run_to_json(const RunResult& run, int indent = 2);

}  // namespace fp4r

#endif  // FP4R_JSON_H_
