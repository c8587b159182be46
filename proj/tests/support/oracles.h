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

#ifndef FP4R_TESTS_SUPPORT_ORACLES_H_
#define FP4R_TESTS_SUPPORT_ORACLES_H_

#include <vector>

#include "fp4r/encoding.h"
#include "fp4r/ground_value.h"
#include "fp4r/server.h"

namespace fp4r::testing {

// Reference read: one pass over the table, keeping entities that agree with
// every non-wildcard field of the query.
std::vector<Entity> read_oracle(const std::vector<Entity>& entities,
                                const Entity& query);

// The encoded types of the IPv4/IPv6 router, written out by hand. LPM fields
// are Option {value: Bytes, prefixLen: Int}.
EncodedTypes router_triple();

// Whether Insert(s, v) typechecks on a channel s for `config`.
bool insert_typechecks(const GroundValue& v, const ServerConfig& config);

}  // namespace fp4r::testing

#endif  // FP4R_TESTS_SUPPORT_ORACLES_H_
