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

#include "fp4r/network.h"

#include <map>
#include <set>

#include "fp4r/eval.h"
#include "fp4r/syntax.h"

namespace fp4r {

const char* network_error_kind_name(NetworkError::Kind kind) {
  switch (kind) {
    case NetworkError::Kind::kDeadlock:
      return "deadlock";
    case NetworkError::Kind::kStuck:
      return "stuck";
    case NetworkError::Kind::kFuelExhausted:
      return "fuel-exhausted";
    case NetworkError::Kind::kPreservation:
      return "preservation-violation";
    case NetworkError::Kind::kOwnership:
      return "channel-ownership";
  }
  return "?";
}

namespace {

struct Mentions {
  std::vector<GroundValue> addresses;
  std::vector<GroundValue> channels;
};

Mentions mentions(const TermPtr& t) {
  Mentions m;
  for_each_literal(t, [&](const GroundValue& v) {
    if (v.is<GroundValue::Address>()) m.addresses.push_back(v);
    if (v.is<GroundValue::Channel>()) m.channels.push_back(v);
  });
  return m;
}

// True if `v` contains an address or a channel anywhere.
bool has_endpoint(const GroundValue& v) {
  if (v.is<GroundValue::Address>() || v.is<GroundValue::Channel>()) return true;
  if (const auto* l = v.get_if<GroundValue::List>()) {
    for (const auto& i : l->items) {
      if (has_endpoint(i)) return true;
    }
  }
  if (const auto* r = v.get_if<GroundValue::Record>()) {
    for (const auto& f : r->fields) {
      if (has_endpoint(f.second)) return true;
    }
  }
  return false;
}

std::vector<std::string> ownership_problems(const Network& net) {
  std::vector<std::string> out;
  for (const auto& c : net.clients) {
    for (const auto& ch : mentions(c.term).channels) {
      const auto& chan = *ch.get_if<GroundValue::Channel>();
      int owners = 0;
      for (const auto& s : net.servers) {
        if (!s.state.channels.count(chan.id)) continue;
        ++owners;
        const auto& a = *s.state.address.get_if<GroundValue::Address>();
        GroundValue expect =
            GroundValue::channel(chan.id, a.matches, a.actions, a.params);
        if (expect != ch) {
          out.push_back("client " + c.id + ": channel " + chan.id +
                        " does not carry the types of server " + s.id);
        }
      }
      if (owners != 1) {
        out.push_back("client " + c.id + ": channel " + chan.id + " is owned by " +
                      std::to_string(owners) + " servers");
      }
    }
  }
  return out;
}

}  // namespace

WellTypedReport network_well_typed(const Network& net, const TypingOptions& opts) {
  WellTypedReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.diagnostics.push_back(std::move(msg));
  };
  std::map<std::string, std::string> address_owner;
  std::map<std::string, std::string> channel_owner;
  for (const auto& s : net.servers) {
    const auto* a = s.state.address.get_if<GroundValue::Address>();
    if (!a) {
      fail("server " + s.id + " has no address");
      continue;
    }
    if (!address_owner.emplace(a->name, s.id).second) {
      fail("address " + a->name + " is shared by servers " +
           address_owner[a->name] + " and " + s.id);
    }
    for (const auto& ch : s.state.channels) {
      if (!channel_owner.emplace(ch, s.id).second) {
        fail("channel " + ch + " is held by servers " + channel_owner[ch] +
             " and " + s.id);
      }
    }
    for (const auto& e : s.state.entities) {
      if (!conforms(e, s.state.config)) {
        fail("server " + s.id + " holds an entity that does not conform: " +
             print_ground(e.to_value()));
      } else if (has_endpoint(e.to_value())) {
        fail("server " + s.id + " holds an entity containing an address or channel");
      }
    }
  }
  for (const auto& c : net.clients) {
    try {
      r.client_types.push_back(typecheck(TypingEnv{}, c.term, opts));
    } catch (const TypeError& e) {
      r.client_types.push_back(nullptr);
      fail("client " + c.id + ": " + e.render());
    }
    for (const auto& addr : mentions(c.term).addresses) {
      const auto& a = *addr.get_if<GroundValue::Address>();
      int owners = 0;
      for (const auto& s : net.servers) {
        const auto* sa = s.state.address.get_if<GroundValue::Address>();
        if (!sa || sa->name != a.name) continue;
        ++owners;
        if (s.state.address != addr) {
          fail("client " + c.id + ": address " + a.name +
               " does not carry the encoded types of server " + s.id);
        }
      }
      if (owners != 1) {
        fail("client " + c.id + ": address " + a.name + " belongs to " +
             std::to_string(owners) + " servers");
      }
    }
  }
  for (auto& msg : ownership_problems(net)) fail(std::move(msg));
  return r;
}

bool network_terminal(const Network& net) {
  for (const auto& c : net.clients) {
    if (!is_value(c.term)) return false;
  }
  return true;
}

std::optional<std::pair<TraceEvent, Network>> network_step(const Network& net) {
  if (network_terminal(net)) return std::nullopt;
  std::vector<std::string> refusals;
  for (std::size_t i = 0; i < net.clients.size(); ++i) {
    const ClientProc& client = net.clients[i];
    if (is_value(client.term)) continue;
    PendingStep s;
    try {
      s = step(client.term);
    } catch (const EvalError& e) {
      throw NetworkError(NetworkError::Kind::kStuck,
                         "client " + client.id + ": " +
                             eval_error_kind_name(e.kind()) + ": " + e.what());
    }
    TraceEvent ev;
    ev.client_id = client.id;
    if (s.kind == PendingStep::Kind::kTau) {
      Network next = net;
      next.clients[i].term = s.term;
      return std::make_pair(std::move(ev), std::move(next));
    }
    ev.tau = false;
    ev.op = s.op;
    ev.target = s.target;
    ev.payload = s.payload;
    bool owned = false;
    for (std::size_t j = 0; j < net.servers.size(); ++j) {
      const ServerProc& srv = net.servers[j];
      bool owner = false;
      if (const auto* a = s.target.get_if<GroundValue::Address>()) {
        const auto* sa = srv.state.address.get_if<GroundValue::Address>();
        owner = sa && sa->name == a->name;
      } else if (const auto* ch = s.target.get_if<GroundValue::Channel>()) {
        owner = srv.state.channels.count(ch->id) > 0;
      }
      if (!owner) continue;
      owned = true;
      auto reply = server_step(srv.state, s.op, s.target, s.payload);
      if (const auto* ref = std::get_if<Refusal>(&reply)) {
        refusals.push_back("client " + client.id + ": server " + srv.id +
                           " refused " + op_name(s.op) + " (" +
                           refusal_reason_name(ref->reason) + ")");
        continue;
      }
      auto& ok = std::get<ServerReply>(reply);
      Network next = net;
      next.servers[j].state = std::move(ok.next);
      next.clients[i].term = s.resume(ok.result);
      ev.response = std::move(ok.result);
      ev.server_id = srv.id;
      return std::make_pair(std::move(ev), std::move(next));
    }
    if (!owned) {
      refusals.push_back("client " + client.id + ": no server owns the target of " +
                         op_name(s.op));
    }
  }
  std::string msg = "no client can move";
  for (const auto& r : refusals) msg += "; " + r;
  throw NetworkError(NetworkError::Kind::kDeadlock, msg);
}

RunResult run_network(const Network& net, const RunOptions& opts) {
  RunResult out;
  out.final_network = net;
  std::map<std::string, TypePtr> types;
  if (opts.check_invariants) {
    for (const auto& c : net.clients) {
      try {
        types[c.id] = typecheck(TypingEnv{}, c.term, opts.typing);
      } catch (const TypeError& e) {
        throw NetworkError(NetworkError::Kind::kPreservation,
                           "client " + c.id + " is not well typed: " + e.render());
      }
    }
  }
  for (std::size_t n = 0;; ++n) {
    if (network_terminal(out.final_network)) return out;
    if (n >= opts.fuel) {
      throw NetworkError(NetworkError::Kind::kFuelExhausted,
                         "network did not terminate within " +
                             std::to_string(opts.fuel) + " steps");
    }
    auto next = network_step(out.final_network);
    if (!next) return out;
    next->first.index = n;
    out.final_network = std::move(next->second);
    if (opts.check_invariants) {
      const std::string& id = next->first.client_id;
      for (const auto& c : out.final_network.clients) {
        if (c.id != id) continue;
        // Each step must give a subtype of the previous step's type, so the
        // chain ends below the initial type.
        TypePtr t;
        try {
          t = typecheck(TypingEnv{}, c.term, opts.typing);
        } catch (const TypeError& e) {
          throw NetworkError(NetworkError::Kind::kPreservation,
                             "client " + id + " no longer typechecks after step " +
                                 std::to_string(n) + ": " + e.render());
        }
        if (!subtype(TypingEnv{}, t, types[id], opts.typing)) {
          throw NetworkError(NetworkError::Kind::kPreservation,
                             "client " + id + " changed type at step " +
                                 std::to_string(n) + ": " + print_type(t) +
                                 " is not a subtype of " + print_type(types[id]));
        }
        types[id] = t;
      }
      auto problems = ownership_problems(out.final_network);
      for (const auto& s : out.final_network.servers) {
        if (!server_well_formed(s.state)) {
          problems.push_back("server " + s.id + " is no longer well formed");
        }
      }
      if (!problems.empty()) {
        throw NetworkError(NetworkError::Kind::kOwnership, problems.front());
      }
    }
    out.trace.push_back(std::move(next->first));
  }
}

}  // namespace fp4r
