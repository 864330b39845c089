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

#include "freezeml/declcheck.hpp"
#include "freezeml/infer.hpp"
#include "freezeml/prelude.hpp"
#include "freezeml/translate.hpp"
#include "test_util.hpp"

namespace {

using namespace freezeml;
using fmltest::M;
using fmltest::T;

const RefinedKindEnv kA{{"a", Kind::Mono}};

TEST(MatchInstance, MonoInstance) {
  auto s = match_instance(KindEnv{}, kA, T("a -> a"), T("Int -> Int"));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ((*s)("a"), int_type());
}

TEST(MatchInstance, ShapeMismatch) {
  EXPECT_FALSE(match_instance(KindEnv{}, kA, T("a -> a"),
                              T("forall b. b -> b")).has_value());
}

TEST(MatchInstance, PolyImageAtMonoSlot) {
  EXPECT_FALSE(match_instance(KindEnv{}, kA, T("a -> a"),
                              T("(forall b. b -> b) -> forall b. b -> b"))
                   .has_value());
}

TEST(MatchInstance, PolyImageAtPolySlot) {
  EXPECT_TRUE(match_instance(KindEnv{}, RefinedKindEnv{{"a", Kind::Poly}},
                             T("a -> a"),
                             T("(forall b. b -> b) -> forall b. b -> b"))
                  .has_value());
}

TEST(MatchInstance, InconsistentAssignment) {
  EXPECT_FALSE(match_instance(KindEnv{}, kA, T("a -> a"), T("Int -> Bool"))
                   .has_value());
}

TEST(CheckTyping, GeneralisedLambdaInPoly) {
  EXPECT_TRUE(check_typing(KindEnv{}, prelude(), M("poly $(\\x.x)"),
                           T("(Int, Bool)")));
}

TEST(CheckTyping, LambdaAtInstance) {
  EXPECT_TRUE(check_typing(KindEnv{}, TypeEnv{}, M("\\x.x"), T("Int -> Int")));
}

TEST(CheckTyping, LambdaIsNotPolymorphicWithoutLet) {
  EXPECT_FALSE(check_typing(KindEnv{}, TypeEnv{}, M("\\x.x"),
                            T("forall a. a -> a")));
}

TEST(CheckTyping, RigidTarget) {
  EXPECT_TRUE(check_typing(KindEnv{"c"}, TypeEnv{}, M("\\x.x"), T("c -> c")));
  EXPECT_FALSE(check_typing(KindEnv{"c", "d"}, TypeEnv{}, M("\\x.x"),
                            T("c -> d")));
}

TEST(CheckTyping, IllFormedJudgement) {
  EXPECT_FML_ERROR(check_typing(KindEnv{}, TypeEnv{}, M("\\x.x"), T("a -> a")),
                   Precondition);
}

TEST(CheckDerivation, AcceptsInferredDerivations) {
  for (const char* src : {"poly $(\\x.x)", "(head ids)@ 3", "choose ~id",
                          "let f = \\x.x in f 1", "runST ~argST"}) {
    Elaboration e = rebuild_derivation(KindEnv{}, prelude(), M(src));
    EXPECT_EQ(check_derivation(e.delta, prelude(), e.term, e.derivation),
              std::nullopt)
        << src;
  }
}

TEST(CheckDerivation, RejectsTamperedType) {
  Elaboration e = rebuild_derivation(KindEnv{}, prelude(), M("id 1"));
  e.derivation.type = bool_type();
  EXPECT_TRUE(check_derivation(e.delta, prelude(), e.term, e.derivation)
                  .has_value());
}

TEST(CheckDerivation, RejectsPolymorphicInstantiationOfLambdaParameter) {
  Elaboration e = rebuild_derivation(KindEnv{}, TypeEnv{}, M("\\x.x"));
  e.derivation.binder_type = T("forall b. b -> b");
  e.derivation.type = T("(forall b. b -> b) -> forall b. b -> b");
  e.derivation.kids[0].type = T("forall b. b -> b");
  EXPECT_TRUE(check_derivation(e.delta, TypeEnv{}, e.term, e.derivation)
                  .has_value());
}

}  // namespace
