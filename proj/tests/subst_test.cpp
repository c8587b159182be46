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

#include "fp4r/subst.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "fp4r/syntax.h"
#include "support/generators.h"

namespace fp4r {
namespace {

TermPtr T(const char* s) { return parse_term(s); }

TEST(SubstTerm, ReplacesFreeOccurrences) {
  TermPtr r = subst_term(T("{a = x, c = y}"), "x", int_lit(3));
  EXPECT_EQ(print_term(r), "{a = 3, c = y}");
}

TEST(SubstTerm, StopsAtShadowingBinders) {
  EXPECT_EQ(print_term(subst_term(T("fun(x: Int) x"), "x", int_lit(1))),
            "fun(x: Int) x");
  EXPECT_EQ(print_term(subst_term(T("let x = x in x"), "x", int_lit(1))),
            "let x = 1 in x");
  EXPECT_EQ(print_term(subst_term(T("x match { x: Int => x, y: Bool => x }"), "x",
                                  int_lit(1))),
            "1 match { x: Int => x, y: Bool => 1 }");
}

TEST(SubstTerm, RenamesTypeBinderThatWouldCapture) {
  // The value mentions the free type variable X; the Fun binder must move.
  TermPtr v = T("fun(z: X) z");
  TermPtr r = subst_term(T("Fun(X) x"), "x", v);
  const auto* tl = r->as<terms::TypeLambda>();
  ASSERT_NE(tl, nullptr);
  EXPECT_NE(tl->var, "X");
  const auto* body = tl->body->as<terms::Lambda>();
  ASSERT_NE(body, nullptr);
  EXPECT_TRUE(alpha_equal(body->param_type, type_var("X")));
}

TEST(SubstTerm, RejectsNonValues) {
  EXPECT_THROW(subst_term(T("x"), "x", T("f 1")), std::invalid_argument);
  EXPECT_THROW(subst_term(T("x"), "x", T("fun(a: Int) b")), std::invalid_argument);
}

TEST(SubstType, CaptureAvoiding) {
  TypePtr t = parse_type("forall Y. X -> Y");
  TypePtr r = subst_type_in_type(t, "X", type_var("Y"));
  const auto* f = r->as<types::Forall>();
  ASSERT_NE(f, nullptr);
  EXPECT_NE(f->var, "Y");
  EXPECT_TRUE(alpha_equal(r, parse_type("forall Z. Y -> Z")));
}

TEST(SubstType, IntoTermAnnotations) {
  TermPtr r = subst_type_in_term(T("fun(a: X) Fun(X) fun(b: X) a"), "X", int_type());
  EXPECT_EQ(print_term(r), "fun(a: Int) Fun(X) fun(b: X) a");
}

TEST(RenameTermVar, RenamesFreeOccurrencesOnly) {
  TermPtr r = rename_term_var(T("{a = x, c = fun(x: Int) x}"), "x", "x1");
  EXPECT_EQ(print_term(r), "{a = x1, c = fun(x: Int) x}");
}

TEST(SubstProperty, AbsentVariableIsIdentity) {
  testing::Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    TermPtr t = testing::random_term(rng, 4);
    EXPECT_TRUE(term_equal(subst_term(t, "absent", int_lit(0)), t)) << print_term(t);
  }
}

TEST(SubstProperty, RemovesTheVariable) {
  testing::Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    // Wrap a random body so that `x` occurs free.
    TermPtr t = record({{"a", var("x")}, {"b", testing::random_term(rng, 3)}});
    TermPtr v = literal(testing::random_ground(rng, 2));
    TermPtr r = subst_term(t, "x", v);
    auto fv = free_term_vars(t);
    fv.erase("x");
    EXPECT_EQ(free_term_vars(r), fv);
    EXPECT_TRUE(term_equal(r->as<terms::Record>()->fields[0].value, v));
  }
}

}  // namespace
}  // namespace fp4r
