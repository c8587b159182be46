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

#include "fp4r/eval.h"

#include <gtest/gtest.h>

#include "fp4r/encoding.h"
#include "fp4r/syntax.h"
#include "fp4r/typing.h"
#include "support/generators.h"

namespace fp4r {
namespace {

std::string Eval(const char* src, std::size_t fuel = 1000) {
  return print_term(run_tau(parse_term(src), fuel));
}

TEST(Eval, BetaAndLet) {
  EXPECT_EQ(Eval("(fun(x: Int) {a = x, c = x}) 3"), "{a = 3, c = 3}");
  EXPECT_EQ(Eval("let x = 1 in let y = {f = x} in y.f"), "1");
  EXPECT_EQ(Eval("(Fun(X) fun(x: X) x)[Int] 7"), "7");
}

TEST(Eval, Lists) {
  EXPECT_EQ(Eval("head (1 :: 2 :: nil)"), "{some = 1}");
  EXPECT_EQ(Eval("tail (1 :: 2 :: nil)"), "{some = 2 :: nil}");
  EXPECT_EQ(Eval("head nil"), "{none = ()}");
  EXPECT_EQ(Eval("(fun(x: Int) x) 1 :: nil"), "1 :: nil");
}

TEST(Eval, MatchPicksTheFirstContainingCase) {
  EXPECT_EQ(Eval("3 match { b: Bool => 0, i: Int => i, t: Top => 2 }"), "3");
  EXPECT_EQ(Eval("{some = 4} match { n: {none: Unit} => 0, s: {some: Int} => s.some }"), "4");
  EXPECT_EQ(Eval("\"x\" match { a: \"y\" => 1, b: String => 2 }"), "2");
}

TEST(Eval, MatchWithNoCaseIsAnError) {
  try {
    run_tau(parse_term("3 match { b: Bool => 0 }"), 10);
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.kind(), EvalError::Kind::kMatchNoCase);
  }
}

TEST(Eval, StuckTerms) {
  try {
    run_tau(parse_term("1 2"), 10);
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.kind(), EvalError::Kind::kStuck);
  }
  EXPECT_THROW(run_tau(parse_term("x"), 10), EvalError);
}

TEST(Eval, FuelIsCounted) {
  TermPtr t = parse_term("let x = 1 in let y = 2 in {a = x, b = y}");
  EXPECT_NO_THROW(run_tau(t, 2));
  try {
    run_tau(t, 1);
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.kind(), EvalError::Kind::kFuelExhausted);
  }
}

TEST(Eval, ValuesDoNotStep) {
  PendingStep s = step(parse_term("{a = 1, b = fun(x: Int) x}"));
  EXPECT_EQ(s.kind, PendingStep::Kind::kDone);
}

TEST(Eval, OperationsBecomeRequests) {
  ServerConfig cfg = testing::router_config();
  GroundValue a = server_address("switch", cfg);
  TermPtr t = let("c", op(OpKind::kConnect, {literal(a)}), record({{"chan", var("c")}}));
  PendingStep s = step(t);
  ASSERT_EQ(s.kind, PendingStep::Kind::kRequest);
  EXPECT_EQ(s.op, OpKind::kConnect);
  EXPECT_EQ(s.target, a);
  EXPECT_FALSE(s.payload.has_value());
  EncodedTypes enc = encode_config(cfg);
  GroundValue ch = GroundValue::channel("switch#1", enc.matches, enc.actions, enc.params);
  TermPtr next = run_tau(s.resume(ch), 10);
  auto g = to_ground(next);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(*g->field("chan"), ch);
}

TEST(Eval, RequestsCarryThePayload) {
  ServerConfig cfg = testing::router_config();
  EncodedTypes enc = encode_config(cfg);
  GroundValue ch = GroundValue::channel("switch#1", enc.matches, enc.actions, enc.params);
  TermPtr t = op(OpKind::kRead, {literal(ch), parse_term("{\"IPv4_table\", \"*\", \"*\", ()}")});
  PendingStep s = step(t);
  ASSERT_EQ(s.kind, PendingStep::Kind::kRequest);
  EXPECT_EQ(s.op, OpKind::kRead);
  ASSERT_TRUE(s.payload.has_value());
  EXPECT_TRUE(s.payload->field("name")->is_string("IPv4_table"));
  EXPECT_EQ(print_term(s.resume(GroundValue::nil())), "nil");
}

TEST(SelectCase, UsesMembership) {
  std::vector<MatchCase> cases = {{"a", parse_type("'1"), int_lit(0)},
                                  {"b", parse_type("Int"), int_lit(1)},
                                  {"c", parse_type("Top"), int_lit(2)}};
  EXPECT_EQ(select_case(int_lit(1), cases), 0u);
  EXPECT_EQ(select_case(int_lit(5), cases), 1u);
  EXPECT_EQ(select_case(bool_lit(true), cases), 2u);
}

TEST(SelectCase, NonGroundValuesUseTheirTypes) {
  std::vector<MatchCase> cases = {{"a", parse_type("Int -> Int"), int_lit(0)},
                                  {"b", parse_type("Top"), int_lit(1)}};
  EXPECT_EQ(select_case(parse_term("fun(x: Int) x"), cases), 0u);
  EXPECT_EQ(select_case(parse_term("fun(x: Bool) x"), cases), 1u);
}

TEST(EvalProperty, GroundValuesEvaluateToThemselves) {
  testing::Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    GroundValue v = testing::random_ground(rng, 3);
    TermPtr t = parse_term(print_ground(v));
    auto g = to_ground(run_tau(t, 1000));
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(*g, v);
  }
}

TEST(EvalProperty, TauStepsPreserveTypesOfPureTerms) {
  // let-chains over records and lists; each step keeps a subtype.
  testing::Rng rng(37);
  for (int i = 0; i < 300; ++i) {
    GroundValue a = testing::random_ground(rng, 2);
    GroundValue b = testing::random_ground(rng, 2);
    TermPtr t = let("x", literal(a),
                    let("y", record({{"l", cons(var("x"), nil())}, {"r", literal(b)}}),
                        record({{"h", head(field(var("y"), "l"))}, {"r", field(var("y"), "r")}})));
    TypePtr prev = typecheck({}, t);
    for (int k = 0; k < 50; ++k) {
      PendingStep s = step(t);
      if (s.kind == PendingStep::Kind::kDone) break;
      ASSERT_EQ(s.kind, PendingStep::Kind::kTau);
      TypePtr next = typecheck({}, s.term);
      EXPECT_TRUE(subtype({}, next, prev)) << print_term(s.term);
      prev = next;
      t = s.term;
    }
    EXPECT_TRUE(is_value(t));
  }
}

}  // namespace
}  // namespace fp4r
