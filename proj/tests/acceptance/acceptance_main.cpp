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

// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fp4r/encoding.h"
#include "fp4r/network.h"
#include "fp4r/scenario.h"
#include "fp4r/server.h"
#include "fp4r/syntax.h"
#include "fp4r/typing.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace fp4r {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome C1() {
  auto t0 = Clock::now();
  TypeAliases aliases;
  add_config_aliases(aliases, testing::router_config(), "");
  auto dir = testing::data_dir() / "router";
  Program ok = load_program_file(dir / "ipv4_forward.fp4r", aliases);
  Program bad = load_program_file(dir / "ipv6_forward.fp4r", aliases);
  TypePtr t = typecheck({}, ok.term);
  if (!alpha_equal(t, bool_type())) return {false, "IPv4 insert has type " + print_type(t)};
  try {
    typecheck({}, bad.term);
    return {false, "IPv6 insert was accepted"};
  } catch (const TypeError& e) {
    if (e.kind() != TypeErrorKind::kNotSubtype || e.path() != "action") {
      return {false, std::string("IPv6 insert rejected with ") +
                         type_error_kind_name(e.kind()) + " at '" + e.path() + "'"};
    }
  }
  double s = Seconds(t0);
  return {s < 1.0, "Bool / not-subtype at action, " + std::to_string(s) + " s"};
}

Outcome C2() {
  auto t0 = Clock::now();
  ServerConfig c = load_p4info_file(testing::data_dir() / "router_p4info.json");
  EncodedTypes got = encode_config(c);
  EncodedTypes want = testing::router_triple();
  bool eq = alpha_equal(got.matches, want.matches) &&
            alpha_equal(got.actions, want.actions) &&
            alpha_equal(got.params, want.params);
  double s = Seconds(t0);
  return {eq && s < 1.0,
          std::string(eq ? "triple equal" : "triple differs") + ", " +
              std::to_string(s) + " s"};
}

Outcome C3() {
  TypePtr a = normalize_type(
      {}, parse_type("(forall X. X match { Int => '42, Bool => \"Hello\" }) 'true"));
  TypePtr b = normalize_type({}, parse_type("Int match { Int => Bool, String => Unit }"));
  bool ok = alpha_equal(a, string_singleton("Hello")) && alpha_equal(b, bool_type());
  return {ok, print_type(a) + " and " + print_type(b)};
}

Outcome C4() {
  Scenario sc = load_scenario(testing::data_dir() / "single_insert" / "scenario.json");
  RunOptions o;
  o.check_invariants = true;
  RunResult r = run_network(sc.network, o);
  const ServerState& before = sc.network.servers.at(0).state;
  const ServerState& after = r.final_network.servers.at(0).state;
  bool value = to_ground(r.final_network.clients.at(0).term) == GroundValue::boolean(true);
  bool chan = after.channels.size() == before.channels.size() + 1;
  bool entity = after.entities.size() == before.entities.size() + 1 &&
                std::equal(before.entities.begin(), before.entities.end(),
                           after.entities.begin()) &&
                after.entities.back().table_name == "IPv4_table";
  bool steps = r.trace.size() <= 4;
  return {value && chan && entity && steps,
          std::to_string(r.trace.size()) + " steps"};
}

struct Population {
  int networks = 0;
  int ill_typed = 0;
  int preservation = 0;
  int stuck = 0;
  int other = 0;
  long steps = 0;
  double seconds = 0;
  std::string first_problem;
};

const Population& RunPopulation() {
  static Population p = [] {
    Population out;
    auto t0 = Clock::now();
    testing::Rng rng(20261019);
    RunOptions o;
    o.check_invariants = true;
    for (int i = 0; i < 1000; ++i) {
      Network n = testing::random_network(rng);
      ++out.networks;
      if (!network_well_typed(n).ok) {
        ++out.ill_typed;
        continue;
      }
      try {
        RunResult r = run_network(n, o);
        out.steps += static_cast<long>(r.trace.size());
        if (!network_terminal(r.final_network)) ++out.stuck;
      } catch (const NetworkError& e) {
        switch (e.kind()) {
          case NetworkError::Kind::kPreservation:
          case NetworkError::Kind::kOwnership:
            ++out.preservation;
            break;
          case NetworkError::Kind::kStuck:
          case NetworkError::Kind::kDeadlock:
            ++out.stuck;
            break;
          case NetworkError::Kind::kFuelExhausted:
            ++out.other;
            break;
        }
        if (out.first_problem.empty()) out.first_problem = e.what();
      }
    }
    out.seconds = Seconds(t0);
    return out;
  }();
  return p;
}

Outcome C5() {
  const Population& p = RunPopulation();
  bool ok = p.networks >= 1000 && p.ill_typed == 0 && p.preservation == 0 &&
            p.seconds <= 300;
  std::string d = std::to_string(p.networks) + " networks, " +
                  std::to_string(p.steps) + " steps, " +
                  std::to_string(p.preservation) + " violations, " +
                  std::to_string(p.ill_typed) + " ill-typed, " +
                  std::to_string(p.seconds) + " s";
  if (!ok && !p.first_problem.empty()) d += "; " + p.first_problem;
  return {ok, d};
}

Outcome C6() {
  const Population& p = RunPopulation();
  bool ok = p.networks >= 1000 && p.ill_typed == 0 && p.stuck == 0 && p.other == 0;
  std::string d = std::to_string(p.networks) + " networks, " +
                  std::to_string(p.stuck) + " stuck or deadlocked";
  if (!ok && !p.first_problem.empty()) d += "; " + p.first_problem;
  return {ok, d};
}

Outcome C7() {
  testing::Rng rng(7001);
  std::vector<ServerConfig> cfgs = {testing::router_config(), testing::config1(),
                                    testing::config2()};
  for (int i = 0; i < 5; ++i) cfgs.push_back(testing::random_config(rng));
  long total = 0, disagree = 0, conformant = 0;
  for (const auto& c : cfgs) {
    for (int k = 0; k < 1000; ++k) {
      GroundValue v = testing::random_entity_value(rng, c);
      bool a = conforms(v, c);
      conformant += a;
      disagree += a != testing::insert_typechecks(v, c);
      ++total;
    }
  }
  return {disagree == 0,
          std::to_string(cfgs.size()) + " configs, " + std::to_string(total) +
              " entities (" + std::to_string(conformant) + " conformant), " +
              std::to_string(disagree) + " disagreements"};
}

Outcome C8() {
  testing::Rng rng(8001);
  int mismatches = 0, nonempty = 0;
  const int kPairs = 1000;
  for (int i = 0; i < kPairs; ++i) {
    ServerConfig c = i % 2 == 0 ? testing::config1() : testing::random_config(rng);
    std::vector<Entity> es;
    int n = static_cast<int>(rng() % 16);
    for (int k = 0; k < n; ++k) {
      es = eval_write(c, es, WriteKind::kInsert, testing::random_entity(rng, c)).first;
    }
    Entity q = testing::random_query(rng, c, es);
    auto got = eval_read(c, es, q);
    nonempty += !got.empty();
    mismatches += got != testing::read_oracle(es, q);
  }
  return {mismatches == 0, std::to_string(kPairs) + " pairs (" + std::to_string(nonempty) +
                               " non-empty), " + std::to_string(mismatches) +
                               " mismatches"};
}

Outcome C9() {
  testing::Rng rng(9001);
  int valid = 0, disjoint_pairs = 0, violations = 0, attempts = 0;
  while (valid < 2500 && attempts < 200000) {
    ++attempts;
    TypePtr a = testing::random_type(rng, 3);
    TypePtr b = rng() % 2 ? testing::related_type(rng, a) : testing::random_type(rng, 3);
    try {
      if (!type_valid({}, a) || !type_valid({}, b)) continue;
      ++valid;
      if (disjoint({}, a, b)) {
        ++disjoint_pairs;
        if (subtype({}, a, b)) ++violations;
      }
    } catch (const TypeError&) {
      // Fuel exhaustion; the pair is not counted.
    }
  }
  return {valid >= 2000 && violations == 0,
          std::to_string(valid) + " valid pairs, " + std::to_string(disjoint_pairs) +
              " disjoint, " + std::to_string(violations) + " violations"};
}

Outcome C10() {
  auto dir = testing::data_dir() / "replication";
  Scenario sc = load_scenario(dir / "scenario.json");
  RunOptions o;
  o.check_invariants = true;
  RunResult r = run_network(sc.network, o);
  auto server = [](const Network& n, const std::string& id) -> const ServerState& {
    for (const auto& s : n.servers) {
      if (s.id == id) return s.state;
    }
    throw std::out_of_range(id);
  };
  bool firewall = true;
  for (const char* id : {"S1", "S2", "S3", "S4"}) {
    const auto& es = server(r.final_network, id).entities;
    firewall &= std::count_if(es.begin(), es.end(), [](const Entity& e) {
                  return e.table_name == "Process.firewall";
                }) == 3;
  }
  bool copied = true;
  int lpm = 0;
  const auto& s2 = server(r.final_network, "S2").entities;
  for (const auto& e : server(sc.network, "S1").entities) {
    if (e.table_name != "Process.ipv4_lpm") continue;
    ++lpm;
    copied &= std::find(s2.begin(), s2.end(), e) != s2.end();
  }
  bool rejected = false;
  try {
    Program p = load_program_file(dir / "inject_lpm_into_config2.fp4r", sc.aliases);
    typecheck({}, p.term);
  } catch (const TypeError&) {
    rejected = true;
  }
  return {firewall && copied && lpm > 0 && rejected,
          std::string("firewall ") + (firewall ? "ok" : "missing") + ", " +
              std::to_string(lpm) + " lpm entries " + (copied ? "copied" : "not copied") +
              ", injection " + (rejected ? "rejected" : "accepted")};
}

}  // namespace
}  // namespace fp4r

int main() {
  using fp4r::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 router insert typing", fp4r::C1},
      {"2 P4Info encoding", fp4r::C2},
      {"3 match-type reduction", fp4r::C3},
      {"4 single insert run", fp4r::C4},
      {"5 preservation", fp4r::C5},
      {"6 progress", fp4r::C6},
      {"7 conformance agrees with typing", fp4r::C7},
      {"8 read oracle", fp4r::C8},
      {"9 disjoint implies not subtype", fp4r::C9},
      {"10 replication", fp4r::C10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
