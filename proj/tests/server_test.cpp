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

#include "fp4r/server.h"

#include <gtest/gtest.h>

#include "fp4r/encoding.h"
#include "fp4r/syntax.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace fp4r {
namespace {

const GroundValue kStar = GroundValue::string("*");

GroundValue Lpm(std::vector<std::uint8_t> addr, int len) {
  return GroundValue::record(
      {{"some", GroundValue::record({{"value", GroundValue::bytes(std::move(addr))},
                                     {"prefixLen", GroundValue::integer(len)}})}});
}

Entity V4(std::vector<std::uint8_t> addr, const char* action = "Drop") {
  Entity e;
  e.table_name = "IPv4_table";
  e.matches = GroundValue::record({{"IPv4_dst_addr", Lpm(std::move(addr), 24)}});
  e.action_name = action;
  if (std::string(action) == "IPv4_forward") {
    e.params = GroundValue::record({{"mac_dst", GroundValue::bytes({1, 2, 3, 4, 5, 6})},
                                    {"port", GroundValue::bytes({1})}});
  }
  return e;
}

Entity Query(const char* table, GroundValue matches, const char* action) {
  Entity q;
  q.table_name = table;
  q.matches = std::move(matches);
  q.action_name = action;
  return q;
}

class ServerTest : public ::testing::Test {
 protected:
  ServerConfig cfg = testing::router_config();
};

TEST_F(ServerTest, Conforms) {
  EXPECT_TRUE(conforms(V4({10, 0, 0, 0}), cfg));
  EXPECT_TRUE(conforms(V4({10, 0, 0, 0}, "IPv4_forward"), cfg));
  EXPECT_TRUE(conforms(Query("*", kStar, "*"), cfg));
  EXPECT_TRUE(conforms(Query("IPv6_table", kStar, "*"), cfg));
  EXPECT_FALSE(conforms(V4({10, 0, 0, 0}, "IPv6_forward"), cfg));
  Entity missing_params = V4({10, 0, 0, 0});
  missing_params.action_name = "IPv4_forward";
  EXPECT_FALSE(conforms(missing_params, cfg));
  Entity wrong_table = V4({10, 0, 0, 0});
  wrong_table.table_name = "IPv6_table";
  EXPECT_FALSE(conforms(wrong_table, cfg));
  EXPECT_FALSE(conforms(Query("*", kStar, "Drop"), cfg));
  EXPECT_FALSE(conforms(GroundValue::integer(1), cfg));
}

TEST_F(ServerTest, ConformsWithoutActionWildcard) {
  cfg.action_wildcard = false;
  EXPECT_FALSE(conforms(Query("IPv4_table", kStar, "*"), cfg));
  EXPECT_TRUE(conforms(Query("*", kStar, "*"), cfg));
}

TEST_F(ServerTest, ReadFilters) {
  std::vector<Entity> es = {V4({10, 0, 1, 0}), V4({10, 0, 2, 0}, "IPv4_forward"),
                            V4({10, 0, 3, 0})};
  EXPECT_EQ(eval_read(cfg, es, Query("*", kStar, "*")), es);
  EXPECT_EQ(eval_read(cfg, es, Query("IPv4_table", kStar, "Drop")),
            (std::vector<Entity>{es[0], es[2]}));
  EXPECT_EQ(eval_read(cfg, es, Query("IPv4_table", es[1].matches, "*")),
            std::vector<Entity>{es[1]});
  EXPECT_TRUE(eval_read(cfg, es, Query("IPv6_table", kStar, "*")).empty());
  Entity prio = Query("IPv4_table", kStar, "*");
  prio.priority = GroundValue::integer(1);
  EXPECT_TRUE(eval_read(cfg, es, prio).empty());
  prio.priority = kStar;
  EXPECT_EQ(eval_read(cfg, es, prio).size(), 3u);
}

TEST_F(ServerTest, InsertModifyDelete) {
  Entity a = V4({10, 0, 1, 0});
  auto [s1, ok1] = eval_write(cfg, {}, WriteKind::kInsert, a);
  EXPECT_TRUE(ok1);
  ASSERT_EQ(s1.size(), 1u);
  auto [s2, ok2] = eval_write(cfg, s1, WriteKind::kInsert, a);
  EXPECT_FALSE(ok2);
  EXPECT_EQ(s2, s1);
  Entity m = V4({10, 0, 1, 0}, "IPv4_forward");
  auto [s3, ok3] = eval_write(cfg, s1, WriteKind::kModify, m);
  EXPECT_TRUE(ok3);
  EXPECT_EQ(s3, std::vector<Entity>{m});
  auto [s4, ok4] = eval_write(cfg, s3, WriteKind::kModify, V4({10, 9, 9, 0}));
  EXPECT_FALSE(ok4);
  auto [s5, ok5] = eval_write(cfg, s3, WriteKind::kDelete, V4({10, 0, 1, 0}));
  EXPECT_TRUE(ok5);
  EXPECT_TRUE(s5.empty());
  auto [s6, ok6] = eval_write(cfg, {}, WriteKind::kDelete, a);
  EXPECT_FALSE(ok6);
}

TEST_F(ServerTest, DeleteWithWildcardMatches) {
  std::vector<Entity> es = {V4({10, 0, 1, 0}), V4({10, 0, 2, 0})};
  auto [out, ok] = eval_write(cfg, es, WriteKind::kDelete, Query("IPv4_table", kStar, "*"));
  EXPECT_TRUE(ok);
  EXPECT_TRUE(out.empty());
}

TEST_F(ServerTest, WildcardsInWrites) {
  EXPECT_THROW(eval_write(cfg, {}, WriteKind::kInsert, Query("*", kStar, "*")),
               WildcardInWrite);
  EXPECT_THROW(eval_write(cfg, {}, WriteKind::kInsert, Query("IPv4_table", kStar, "Drop")),
               WildcardInWrite);
  Entity a = V4({10, 0, 1, 0});
  a.action_name = "*";
  EXPECT_THROW(eval_write(cfg, {}, WriteKind::kModify, a), WildcardInWrite);
}

TEST_F(ServerTest, StepProtocol) {
  ServerState st;
  st.config = cfg;
  st.address = server_address("sw", cfg);
  EXPECT_TRUE(std::holds_alternative<Refusal>(
      server_step(st, OpKind::kConnect, server_address("other", cfg), std::nullopt)));
  auto r = server_step(st, OpKind::kConnect, st.address, std::nullopt);
  ASSERT_TRUE(std::holds_alternative<ServerReply>(r));
  ServerReply c = std::get<ServerReply>(r);
  ASSERT_TRUE(c.result.is<GroundValue::Channel>());
  EXPECT_EQ(c.next.channels.size(), 1u);

  GroundValue ch = c.result;
  auto ins = server_step(c.next, OpKind::kInsert, ch, V4({10, 0, 0, 0}).to_value());
  ASSERT_TRUE(std::holds_alternative<ServerReply>(ins));
  EXPECT_EQ(std::get<ServerReply>(ins).result, GroundValue::boolean(true));
  ServerState after = std::get<ServerReply>(ins).next;
  EXPECT_TRUE(server_well_formed(after));

  auto wild = server_step(after, OpKind::kInsert, ch, Query("*", kStar, "*").to_value());
  ASSERT_TRUE(std::holds_alternative<ServerReply>(wild));
  EXPECT_EQ(std::get<ServerReply>(wild).result, GroundValue::boolean(false));

  auto rd = server_step(after, OpKind::kRead, ch, Query("*", kStar, "*").to_value());
  ASSERT_TRUE(std::holds_alternative<ServerReply>(rd));
  EXPECT_EQ(std::get<ServerReply>(rd).result,
            GroundValue::list({V4({10, 0, 0, 0}).to_value()}));

  auto bad = server_step(after, OpKind::kInsert, ch,
                         V4({10, 0, 0, 0}, "IPv6_forward").to_value());
  ASSERT_TRUE(std::holds_alternative<Refusal>(bad));
  EXPECT_EQ(std::get<Refusal>(bad).reason, Refusal::Reason::kNonconformant);

  GroundValue stranger = GroundValue::channel("sw#99", nullptr, nullptr, nullptr);
  auto unknown = server_step(after, OpKind::kRead, stranger, Query("*", kStar, "*").to_value());
  ASSERT_TRUE(std::holds_alternative<Refusal>(unknown));
  EXPECT_EQ(std::get<Refusal>(unknown).reason, Refusal::Reason::kUnknownChannel);
}

TEST(ServerProperty, ReadAgreesWithOracle) {
  testing::Rng rng(41);
  for (int i = 0; i < 600; ++i) {
    ServerConfig c = i % 3 == 0 ? testing::config1() : testing::random_config(rng);
    std::vector<Entity> es;
    int n = static_cast<int>(rng() % 12);
    for (int k = 0; k < n; ++k) {
      Entity e = testing::random_entity(rng, c);
      es = eval_write(c, es, WriteKind::kInsert, e).first;
      if (rng() % 4 == 0) es = eval_write(c, es, WriteKind::kInsert, e).first;
    }
    Entity q = testing::random_query(rng, c, es);
    EXPECT_EQ(eval_read(c, es, q), testing::read_oracle(es, q));
  }
}

TEST(ServerProperty, ConformsAgreesWithTyping) {
  testing::Rng rng(43);
  std::vector<ServerConfig> cfgs = {testing::router_config(), testing::config1(),
                                    testing::config2()};
  for (int i = 0; i < 3; ++i) cfgs.push_back(testing::random_config(rng));
  for (const auto& c : cfgs) {
    int agree = 0, conformant = 0;
    for (int k = 0; k < 200; ++k) {
      GroundValue v = testing::random_entity_value(rng, c);
      bool a = conforms(v, c);
      bool b = testing::insert_typechecks(v, c);
      conformant += a;
      agree += a == b;
      EXPECT_EQ(a, b) << print_ground(v);
    }
    EXPECT_EQ(agree, 200);
    EXPECT_GT(conformant, 20);
    EXPECT_LT(conformant, 190);
  }
}

TEST(ServerProperty, WritesPreserveWellFormedness) {
  testing::Rng rng(47);
  for (int i = 0; i < 200; ++i) {
    ServerState st;
    st.config = testing::random_config(rng);
    for (int k = 0; k < 10; ++k) {
      Entity e = testing::random_entity(rng, st.config);
      WriteKind w = static_cast<WriteKind>(rng() % 3);
      st.entities = eval_write(st.config, st.entities, w, e).first;
    }
    EXPECT_TRUE(server_well_formed(st));
  }
}

}  // namespace
}  // namespace fp4r
