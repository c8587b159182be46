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

#include "fp4r/json.h"

#include <gtest/gtest.h>

#include "fp4r/scenario.h"
#include "fp4r/syntax.h"
#include "support/generators.h"

namespace fp4r {
namespace {

TEST(Json, GroundEncoding) {
  GroundValue v = GroundValue::record(
      {{"a", GroundValue::unit()},
       {"b", GroundValue::list({GroundValue::integer(1), GroundValue::boolean(false)})},
       {"c", GroundValue::bytes({0, 255})}});
  EXPECT_EQ(ground_to_json(v), R"({"a":null,"b":[1,false],"c":{"$bytes":[0,255]}})");
  EXPECT_EQ(ground_from_json(ground_to_json(v)), v);
}

TEST(Json, EndpointsCarryTheirTypes) {
  GroundValue a = server_address("sw", testing::router_config());
  EXPECT_EQ(ground_from_json(ground_to_json(a)), a);
}

TEST(Json, Errors) {
  EXPECT_THROW(ground_from_json("{"), JsonError);
  EXPECT_THROW(ground_from_json("1.5"), JsonError);
  EXPECT_THROW(ground_from_json(R"({"$bytes": [300]})"), JsonError);
  EXPECT_THROW(entities_from_json("{}"), JsonError);
  EXPECT_THROW(entities_from_json(R"([{"name": "t"}])"), JsonError);
}

TEST(Json, EntityFile) {
  auto es = entities_from_json(
      read_text_file(testing::data_dir() / "replication" / "s1_entities.json"));
  ASSERT_FALSE(es.empty());
  EXPECT_EQ(es[0].table_name, "Process.ipv4_lpm");
  EXPECT_FALSE(es[0].priority.has_value());
  EXPECT_EQ(entities_from_json(entities_to_json(es)), es);
}

TEST(JsonProperty, GroundRoundTrip) {
  testing::Rng rng(19);
  for (int i = 0; i < 1000; ++i) {
    GroundValue v = testing::random_ground(rng, 3);
    EXPECT_EQ(ground_from_json(ground_to_json(v)), v) << print_ground(v);
  }
}

TEST(JsonProperty, EntityRoundTrip) {
  testing::Rng rng(23);
  ServerConfig c = testing::config1();
  std::vector<Entity> es;
  for (int i = 0; i < 300; ++i) es.push_back(testing::random_entity(rng, c));
  EXPECT_EQ(entities_from_json(entities_to_json(es)), es);
}

}  // namespace
}  // namespace fp4r
