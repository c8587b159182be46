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

#ifndef FP4R_NETWORK_H_
#define FP4R_NETWORK_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fp4r/ground_value.h"
#include "fp4r/server.h"
#include "fp4r/term.h"
#include "fp4r/typing.h"

namespace fp4r {

struct ClientProc {
  std::string id;
  TermPtr term;
};

struct ServerProc {
  std::string id;
  ServerState state;
};

// Clients are scheduled in list order.
struct Network {
  std::vector<ClientProc> clients;
  std::vector<ServerProc> servers;
};

struct TraceEvent {
  std::size_t index = 0;
  std::string client_id;
  bool tau = true;
  OpKind op = OpKind::kConnect;
  std::optional<GroundValue> target;
  std::optional<GroundValue> payload;
  std::optional<GroundValue> response;
  std::optional<std::string> server_id;
};

struct WellTypedReport {
  bool ok = true;
  std::vector<std::string> diagnostics;
  std::vector<TypePtr> client_types;  // null where typechecking failed
};

WellTypedReport network_well_typed(const Network& net,
                                   const TypingOptions& opts = {});

class NetworkError : public std::runtime_error {
 public:
  enum class Kind { kDeadlock, kStuck, kFuelExhausted, kPreservation, kOwnership };

  NetworkError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* network_error_kind_name(NetworkError::Kind kind);

bool network_terminal(const Network& net);

// One Net-α or Net-Comm step by the first client able to move, or nullopt
// when every client is a value. Throws NetworkError(kDeadlock) when some
// client is not a value but none can move, and kStuck when a client term has
// no applicable rule.
std::optional<std::pair<TraceEvent, Network>> network_step(const Network& net);

struct RunOptions {
  std::size_t fuel = 100000;
  // Re-typecheck each client after it moves (its new type must be a subtype
  // of the previous one) and check channel ownership and server
  // well-formedness after every step.
  bool check_invariants = false;
  TypingOptions typing;
};

struct RunResult {
  Network final_network;
  std::vector<TraceEvent> trace;
};

// Steps until the network is terminal. Throws NetworkError.
RunResult run_network(const Network& net, const RunOptions& opts = {});

}  // namespace fp4r

#endif  // FP4R_NETWORK_H_
