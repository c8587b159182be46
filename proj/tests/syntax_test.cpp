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

#include "fp4r/syntax.h"

#include <gtest/gtest.h>

#include "fp4r/sugar.h"
#include "support/generators.h"

namespace fp4r {
namespace {

TEST(ParseType, BaseTypes) {
  EXPECT_TRUE(alpha_equal(parse_type("Int"), int_type()));
  EXPECT_TRUE(alpha_equal(parse_type("Bytes"), bytes_type()));
  EXPECT_TRUE(alpha_equal(parse_type("Top"), top_type()));
  EXPECT_TRUE(alpha_equal(parse_type("[Bool]"), list_type(bool_type())));
}

TEST(ParseType, UnionAndArrow) {
  TypePtr t = parse_type("Int | Bool -> String");
  const auto* a = t->as<types::Arrow>();
  ASSERT_NE(a, nullptr);
  EXPECT_TRUE(alpha_equal(a->from, union_type(int_type(), bool_type())));
  EXPECT_TRUE(alpha_equal(a->to, string_type()));
}

TEST(ParseType, Singletons) {
  EXPECT_TRUE(alpha_equal(parse_type("'42"), singleton_type(GroundValue::integer(42))));
  EXPECT_TRUE(alpha_equal(parse_type("\"IPv4_table\""), string_singleton("IPv4_table")));
  EXPECT_TRUE(alpha_equal(parse_type("'true"), singleton_type(GroundValue::boolean(true))));
}

TEST(ParseType, MatchType) {
  TypePtr t = parse_type("Int match { Int => Bool, String => Unit }");
  const auto* m = t->as<types::Match>();
  ASSERT_NE(m, nullptr);
  ASSERT_EQ(m->cases.size(), 2u);
  EXPECT_TRUE(alpha_equal(m->cases[1].pattern, string_type()));
  EXPECT_TRUE(alpha_equal(m->cases[1].continuation, unit_type()));
}

TEST(ParseType, ForallWithBound) {
  TypePtr t = parse_type("forall X <: Int | Bool. X -> X");
  const auto* f = t->as<types::Forall>();
  ASSERT_NE(f, nullptr);
  EXPECT_TRUE(alpha_equal(f->bound, union_type(int_type(), bool_type())));
}

TEST(ParseType, QuotedLabels) {
  TypePtr t = parse_type("{\"hdr.ipv4.dstAddr\": Bytes, port: Bytes}");
  const auto* r = t->as<types::Record>();
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->fields[0].label, "hdr.ipv4.dstAddr");
  EXPECT_TRUE(alpha_equal(parse_type(print_type(t)), t));
}

TEST(ParseType, BuiltinAbbreviations) {
  EXPECT_TRUE(alpha_equal(parse_type("Option Int"), sugar::option(int_type())));
  EXPECT_EQ(print_type(sugar::option(int_type())), "Option Int");
}

TEST(ParseTerm, PositionalEntitySugar) {
  TermPtr t = parse_term("{\"t\", \"*\", \"a\", ()}");
  auto g = to_ground(t);
  ASSERT_TRUE(g.has_value());
  ASSERT_NE(g->field("name"), nullptr);
  EXPECT_TRUE(g->field("name")->is_string("t"));
  EXPECT_TRUE(g->field("matches")->is_string("*"));
  EXPECT_TRUE(g->field("action")->is_string("a"));
  EXPECT_TRUE(g->field("params")->is<GroundValue::Unit>());
}

TEST(ParseTerm, MatchBindsLooserThanHead) {
  TermPtr t = parse_term("head l match { x: Top => 1 }");
  const auto* m = t->as<terms::Match>();
  ASSERT_NE(m, nullptr);
  EXPECT_TRUE(m->scrutinee->is<terms::Head>());
}

TEST(ParseTerm, ApplicationIsLeftAssociative) {
  TermPtr t = parse_term("f x y");
  const auto* outer = t->as<terms::App>();
  ASSERT_NE(outer, nullptr);
  EXPECT_TRUE(outer->fn->is<terms::App>());
}

TEST(ParseTerm, OpsCheckArity) {
  EXPECT_THROW(parse_term("Insert(c)"), ParseError);
  EXPECT_NO_THROW(parse_term("Connect(a)"));
}

TEST(ParseTerm, BytesLiteral) {
  auto g = to_ground(parse_term("b(10, 0, 255)"));
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(*g, GroundValue::bytes({10, 0, 255}));
  EXPECT_THROW(parse_term("b(256)"), ParseError);
}

TEST(ParseTerm, ErrorsCarryPositions) {
  try {
    parse_term("let x = 1 in\n  x match { }");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(ParseProgram, DeclarationsAreExpanded) {
  Program p = parse_program("type A = Int | Bool;\ntype B = [A];\nfun(x: B) x");
  ASSERT_EQ(p.aliases.count("B"), 1u);
  EXPECT_TRUE(alpha_equal(p.aliases.at("B"), list_type(union_type(int_type(), bool_type()))));
  ASSERT_NE(p.term, nullptr);
}

TEST(ParseProgram, ReservedWordCannotNameType) {
  EXPECT_THROW(parse_program("type Chan = Int;"), ParseError);
}

TEST(ParseProgram, AddressLiteralWithServerRefAlias) {
  Program p = parse_program(
      "type S = ServerRef[Int, Bool, Unit];\naddr(\"s\", S)");
  auto g = to_ground(p.term);
  ASSERT_TRUE(g.has_value());
  const auto* a = g->get_if<GroundValue::Address>();
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->name, "s");
  EXPECT_TRUE(alpha_equal(a->actions, bool_type()));
}

TEST(PrintType, Golden) {
  EXPECT_EQ(print_type(parse_type("forall X. X match { Int => '42, Bool => \"Hello\" }")),
            "forall X. X match { Int => '42, Bool => \"Hello\" }");
  EXPECT_EQ(print_type(parse_type("(Int -> Int) -> Int")), "(Int -> Int) -> Int");
}

TEST(SyntaxProperty, TypeRoundTrip) {
  testing::Rng rng(7);
  for (int i = 0; i < 1500; ++i) {
    TypePtr t = testing::random_type(rng, 3);
    std::string text = print_type(t);
    TypePtr back;
    ASSERT_NO_THROW(back = parse_type(text)) << text;
    EXPECT_TRUE(alpha_equal(back, t)) << text << "\nreprinted: " << print_type(back);
  }
}

TEST(SyntaxProperty, TermPrintIsAFixpoint) {
  testing::Rng rng(11);
  for (int i = 0; i < 1500; ++i) {
    TermPtr t = testing::random_term(rng, 4);
    std::string text = print_term(t);
    TermPtr back;
    ASSERT_NO_THROW(back = parse_term(text)) << text;
    EXPECT_EQ(print_term(back), text);
    EXPECT_EQ(free_term_vars(back), free_term_vars(t)) << text;
  }
}

TEST(SyntaxProperty, GroundRoundTrip) {
  testing::Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    GroundValue v = testing::random_ground(rng, 3);
    auto back = to_ground(parse_term(print_ground(v)));
    ASSERT_TRUE(back.has_value()) << print_ground(v);
    EXPECT_EQ(*back, v) << print_ground(v);
  }
}

}  // namespace
}  // namespace fp4r
