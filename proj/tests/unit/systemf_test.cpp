// Copyright 2026 The FreezeML C++ Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "freezeml/prelude.hpp"
#include "freezeml/systemf.hpp"
#include "generators.hpp"
#include "test_util.hpp"

namespace {

using namespace freezeml;
using fmltest::T;

FTerm F(std::string_view s) { return parse_fterm(s); }

TEST(FTypecheck, PolymorphicIdentity) {
  EXPECT_TRUE(alpha_eq(f_typecheck(KindEnv{}, TypeEnv{}, F("/\\a. \\x:a. x")),
                       T("forall a. a -> a")));
}

TEST(FTypecheck, TypeApplicationSubstitutes) {
  TypeEnv g{{"x", T("forall a. a -> a")}};
  EXPECT_EQ(f_typecheck(KindEnv{}, g, F("x [Int]")), T("Int -> Int"));
}

TEST(FTypecheck, ImpredicativeTypeApplication) {
  TypeEnv g{{"x", T("forall a. a -> a")}};
  EXPECT_TRUE(alpha_eq(f_typecheck(KindEnv{}, g, F("x [forall b. b -> b] x")),
                       T("forall b. b -> b")));
}

TEST(FTypecheck, ArgumentMismatch) {
  EXPECT_FML_ERROR(f_typecheck(KindEnv{}, prelude(), F("(\\x:Int. x) True")),
                   TypeMismatch);
}

TEST(FTypecheck, NotAFunction) {
  EXPECT_FML_ERROR(f_typecheck(KindEnv{}, TypeEnv{}, F("1 1")), NotAFunction);
}

TEST(FTypecheck, NotAForall) {
  EXPECT_FML_ERROR(f_typecheck(KindEnv{}, TypeEnv{}, F("1 [Int]")), NotAForall);
}

TEST(FTypecheck, ValueRestriction) {
  EXPECT_FML_ERROR(f_typecheck(KindEnv{}, prelude(), F("/\\a. id [a -> a] id")),
                   ValueRestriction);
}

TEST(FTypecheck, ShadowedTypeAbstraction) {
  EXPECT_FML_ERROR(f_typecheck(KindEnv{"a"}, TypeEnv{}, F("/\\a. 1")),
                   ShadowedTyVar);
}

TEST(FTypecheck, Unbound) {
  EXPECT_FML_ERROR(f_typecheck(KindEnv{}, TypeEnv{}, F("y")), UnboundVar);
  EXPECT_FML_ERROR(f_typecheck(KindEnv{}, TypeEnv{}, F("\\x:a. x")),
                   UnboundTyVar);
}

TEST(FLet, TypechecksAtBodyType) {
  FTerm t = f_let("x", int_type(), FTerm::int_lit(1), FTerm::var("x"));
  EXPECT_EQ(f_typecheck(KindEnv{}, TypeEnv{}, t), int_type());
  EXPECT_TRUE(t.is(FTerm::Tag::App));
  EXPECT_TRUE(t.fn().is(FTerm::Tag::Lam));
}

TEST(FSugar, NaryTypeAbstraction) {
  std::vector<std::string> vs{"a", "b"};
  FTerm t = f_ty_abs(vs, FTerm::int_lit(0));
  ASSERT_TRUE(t.is(FTerm::Tag::TyAbs));
  EXPECT_EQ(t.name(), "a");
  ASSERT_TRUE(t.body().is(FTerm::Tag::TyAbs));
  EXPECT_EQ(t.body().name(), "b");
}

TEST(FSugar, NaryTypeApplicationNestsLeft) {
  std::vector<Type> args{int_type(), bool_type()};
  FTerm t = f_ty_app(FTerm::var("pair"), args);
  ASSERT_TRUE(t.is(FTerm::Tag::TyApp));
  EXPECT_EQ(t.type(), bool_type());
  EXPECT_EQ(t.fn().type(), int_type());
}

TEST(FValues, Classification) {
  EXPECT_TRUE(is_f_value(F("\\x:Int. x")));
  EXPECT_TRUE(is_f_value(F("/\\a. \\x:a. x")));
  EXPECT_TRUE(is_f_value(F("x [Int] [Bool]")));
  EXPECT_TRUE(is_f_value(F("(\\x:Int. x) 1")));
  EXPECT_FALSE(is_f_value(F("f 1")));
}

TEST(FRender, RoundTripsGeneratedTerms) {
  gen::Rng rng(51);
  gen::FGen g(rng, prelude());
  for (int i = 0; i < 1000; ++i) {
    gen::FGen::Typed t = g.term(5);
    std::string text = render_fterm(t.term);
    EXPECT_EQ(parse_fterm(text), t.term) << text;
    EXPECT_TRUE(alpha_eq(f_typecheck(KindEnv{}, prelude(), t.term), t.type))
        << text;
  }
}

TEST(FApply, InstantiatesAnnotations) {
  FTerm t = apply(TypeMap{{"a", int_type()}}, F("\\x:a. x [a]"));
  EXPECT_EQ(t, F("\\x:Int. x [Int]"));
}

}  // namespace
