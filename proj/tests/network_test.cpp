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

#include <gtest/gtest.h>

#include <algorithm>

#include "fp4r/encoding.h"
#include "fp4r/scenario.h"
#include "fp4r/syntax.h"
#include "support/generators.h"

namespace fp4r {
namespace {

const ServerProc& Server(const Network& n, const std::string& id) {
  for (const auto& s : n.servers) {
    if (s.id == id) return s;
  }
  throw std::out_of_range(id);
}

std::size_t CountTable(const ServerProc& s, const std::string& table) {
  return std::count_if(s.state.entities.begin(), s.state.entities.end(),
                       [&](const Entity& e) { return e.table_name == table; });
}

TEST(Network, SingleInsertRun) {
  Scenario sc = load_scenario(testing::data_dir() / "single_insert" / "scenario.json");
  EXPECT_TRUE(network_well_typed(sc.network).ok);
  RunOptions o;
  o.check_invariants = true;
  RunResult r = run_network(sc.network, o);
  ASSERT_EQ(r.final_network.clients.size(), 1u);
  EXPECT_EQ(to_ground(r.final_network.clients[0].term), GroundValue::boolean(true));
  const ServerState& before = sc.network.servers[0].state;
  const ServerState& after = r.final_network.servers[0].state;
  EXPECT_EQ(after.channels.size(), before.channels.size() + 1);
  ASSERT_EQ(after.entities.size(), before.entities.size() + 1);
  EXPECT_EQ(after.entities.back().table_name, "IPv4_table");
  EXPECT_EQ(after.entities.back().action_name, "IPv4_forward");
  EXPECT_LE(r.trace.size(), 4u);
  EXPECT_FALSE(r.trace.front().tau);
  EXPECT_EQ(r.trace.front().op, OpKind::kConnect);
}

TEST(Network, Replication) {
  Scenario sc = load_scenario(testing::data_dir() / "replication" / "scenario.json");
  WellTypedReport wt = network_well_typed(sc.network);
  ASSERT_TRUE(wt.ok) << (wt.diagnostics.empty() ? "" : wt.diagnostics.front());
  RunOptions o;
  o.check_invariants = true;
  RunResult r = run_network(sc.network, o);
  const Network& n = r.final_network;
  for (const char* id : {"S1", "S2", "S3", "S4"}) {
    EXPECT_EQ(CountTable(Server(n, id), "Process.firewall"), 3u) << id;
  }
  for (const auto& e : Server(sc.network, "S1").state.entities) {
    if (e.table_name != "Process.ipv4_lpm") continue;
    const auto& s2 = Server(n, "S2").state.entities;
    EXPECT_NE(std::find(s2.begin(), s2.end(), e), s2.end());
  }
  EXPECT_EQ(CountTable(Server(n, "S4"), "Process.ipv4_table"),
            CountTable(Server(sc.network, "S3"), "Process.ipv4_table"));
}

TEST(Network, InjectionIsRejected) {
  Scenario sc = load_scenario(testing::data_dir() / "replication" / "scenario.json");
  Program p = load_program_file(
      testing::data_dir() / "replication" / "inject_lpm_into_config2.fp4r", sc.aliases);
  EXPECT_THROW(typecheck({}, p.term), TypeError);
}

Network OneServer(TermPtr client) {
  ServerConfig cfg = testing::router_config();
  Network n;
  ServerProc s;
  s.id = "S";
  s.state.config = cfg;
  s.state.address = server_address("sw", cfg);
  n.servers.push_back(s);
  n.clients.push_back({"c", std::move(client)});
  return n;
}

TEST(Network, UnownedAddressDeadlocks) {
  GroundValue elsewhere = server_address("nowhere", testing::router_config());
  Network n = OneServer(op(OpKind::kConnect, {literal(elsewhere)}));
  try {
    run_network(n);
    FAIL();
  } catch (const NetworkError& e) {
    EXPECT_EQ(e.kind(), NetworkError::Kind::kDeadlock);
  }
  EXPECT_FALSE(network_well_typed(n).ok);
}

TEST(Network, StuckClient) {
  Network n = OneServer(parse_term("1 2"));
  try {
    run_network(n);
    FAIL();
  } catch (const NetworkError& e) {
    EXPECT_EQ(e.kind(), NetworkError::Kind::kStuck);
  }
}

TEST(Network, FuelBound) {
  Scenario sc = load_scenario(testing::data_dir() / "single_insert" / "scenario.json");
  RunOptions o;
  o.fuel = 1;
  try {
    run_network(sc.network, o);
    FAIL();
  } catch (const NetworkError& e) {
    EXPECT_EQ(e.kind(), NetworkError::Kind::kFuelExhausted);
  }
}

TEST(NetworkProperty, RandomNetworksRunSafely) {
  testing::Rng rng(53);
  RunOptions o;
  o.check_invariants = true;
  for (int i = 0; i < 150; ++i) {
    Network n = testing::random_network(rng);
    WellTypedReport wt = network_well_typed(n);
    ASSERT_TRUE(wt.ok) << (wt.diagnostics.empty() ? "" : wt.diagnostics.front());
    RunResult r;
    ASSERT_NO_THROW(r = run_network(n, o)) << i;
    EXPECT_TRUE(network_terminal(r.final_network));
  }
}

}  // namespace
}  // namespace fp4r
