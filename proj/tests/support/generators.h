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

#ifndef FP4R_TESTS_SUPPORT_GENERATORS_H_
#define FP4R_TESTS_SUPPORT_GENERATORS_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "fp4r/encoding.h"
#include "fp4r/ground_value.h"
#include "fp4r/network.h"
#include "fp4r/server.h"
#include "fp4r/term.h"
#include "fp4r/type.h"

namespace fp4r::testing {

using Rng = std::mt19937;

std::filesystem::path data_dir();

// The three configurations under tests/data.
ServerConfig router_config();
ServerConfig config1();
ServerConfig config2();

// Tables t0.., actions a0.., every match kind represented over time.
ServerConfig random_config(Rng& rng);

GroundValue random_bytes(Rng& rng, int max_len = 4);
GroundValue random_match_value(Rng& rng, MatchKind kind);

// A concrete entity (no wildcards) that conforms to `config`.
Entity random_entity(Rng& rng, const ServerConfig& config);

// An entity value that may or may not conform: a conformant entity with
// zero or more random corruptions, or a wildcard pattern.
GroundValue random_entity_value(Rng& rng, const ServerConfig& config);

// A read query whose fields are "*" or drawn from `pool`, so that some
// entities match.
Entity random_query(Rng& rng, const ServerConfig& config,
                    const std::vector<Entity>& pool);

// Small closed types over base types, singletons, records, lists, unions,
// arrows, match types and type applications.
TypePtr random_type(Rng& rng, int depth = 3);
GroundValue random_ground(Rng& rng, int depth = 2);
// A type related to `t` (a supertype, subtype or sibling) to make subtyping
// pairs interesting.
TypePtr related_type(Rng& rng, const TypePtr& t);

// Closed terms for parser round trips.
TermPtr random_term(Rng& rng, int depth = 3);

// A well-typed network of one to three servers and one to three clients
// running straight-line programs over Connect, Read, Insert, Modify, Delete,
// let and match.
Network random_network(Rng& rng);

}  // namespace fp4r::testing

#endif  // FP4R_TESTS_SUPPORT_GENERATORS_H_
