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
#include "freezeml/prelude.hpp"
#include "freezeml/systemf.hpp"
#include "freezeml/translate.hpp"
#include "generators.hpp"
#include "test_util.hpp"

namespace {

using namespace freezeml;
using fmltest::M;
using fmltest::T;

FTerm elaborate(std::string_view src, const TypeEnv& g = prelude(),
                Residuals mode = Residuals::Ground) {
  Elaboration e = rebuild_derivation(KindEnv{}, g, parse_program(src), mode);
  return to_systemf(e.derivation);
}

TEST(ToSystemF, FrozenVariableIsBare) {
  EXPECT_EQ(elaborate("~id"), FTerm::var("id"));
}

TEST(ToSystemF, VariableGetsTypeArguments) {
  FTerm t = elaborate("id 1");
  ASSERT_TRUE(t.fn().is(FTerm::Tag::TyApp));
  EXPECT_EQ(t.fn().type(), int_type());
}

TEST(ToSystemF, AnnotatedLambdaIsHomomorphic) {
  EXPECT_EQ(elaborate("\\(x:Int).x", TypeEnv{}),
            FTerm::lam("x", int_type(), FTerm::var("x")));
}

TEST(ToSystemF, WorkedExample) {
  const char* src = "let app = \\f.\\z.f z in app ~auto ~id";
  Elaboration e = rebuild_derivation(KindEnv{}, prelude(), M(src));
  FTerm f = to_systemf(e.derivation);
  Type id_t = T("forall a. a -> a");
  EXPECT_TRUE(alpha_eq(f_typecheck(KindEnv{}, prelude(), f), id_t));
  // the body applies app [∀a.a→a] [∀a.a→a]
  const FTerm& body = f.fn().body();
  const FTerm& head = body.fn().fn();
  ASSERT_TRUE(head.is(FTerm::Tag::TyApp));
  ASSERT_TRUE(head.fn().is(FTerm::Tag::TyApp));
  EXPECT_TRUE(alpha_eq(head.type(), id_t));
  EXPECT_TRUE(alpha_eq(head.fn().type(), id_t));
  EXPECT_EQ(head.fn().fn(), FTerm::var("app"));
}

TEST(ToSystemF, RigidResidualsStayAbstract) {
  Elaboration e = rebuild_derivation(KindEnv{}, TypeEnv{}, M("\\x.x"),
                                     Residuals::Rigid);
  ASSERT_EQ(e.delta.size(), 1u);
  EXPECT_TRUE(alpha_eq(f_typecheck(e.delta, TypeEnv{}, to_systemf(e.derivation)),
                       e.type));
}

TEST(ToSystemF, GroundResidualsBecomeInt) {
  Elaboration e = rebuild_derivation(KindEnv{}, TypeEnv{}, M("\\x.x"));
  EXPECT_EQ(e.type, T("Int -> Int"));
}

TEST(ToSystemF, PreservesTypesOfRandomTerms) {
  gen::Rng rng(61);
  int typed = 0;
  for (int i = 0; i < 3000 && typed < 300; ++i) {
    Term m = gen::random_freezeml_term(rng, 4);
    std::optional<Elaboration> e;
    try {
      e = rebuild_derivation(KindEnv{}, prelude(), m, Residuals::Rigid);
    } catch (const Error&) {
      continue;
    }
    ++typed;
    FTerm f = to_systemf(e->derivation);
    EXPECT_TRUE(alpha_eq(f_typecheck(e->delta, prelude(), f), e->type))
        << render_term(m);
  }
  EXPECT_EQ(typed, 300);
}

TEST(FromSystemF, VariableIsFrozen) {
  EXPECT_EQ(from_systemf(KindEnv{}, prelude(), FTerm::var("id")),
            Term::freeze("id"));
}

TEST(FromSystemF, TypeAbstraction) {
  Term m = from_systemf(KindEnv{}, TypeEnv{}, parse_fterm("/\\a. \\x:a. x"));
  EXPECT_EQ(render_term(m), "let (y : forall a. a -> a) = (\\(x:a).x)@ in ~y");
}

TEST(FromSystemF, TypeApplication) {
  TypeEnv g{{"x", T("forall a. a -> a")}};
  Term m = from_systemf(KindEnv{}, g, parse_fterm("x [Int]"));
  EXPECT_EQ(m, Term::let_ann("y", T("Int -> Int"),
                             Term::inst(Term::freeze("x")), Term::freeze("y")));
}

TEST(FromSystemF, NaiveTranslationBreaksTyping) {
  TypeEnv g{{"x", T("forall a. a -> a")}};
  Term m = from_systemf(KindEnv{}, g, parse_fterm("x [Int]"), true);
  EXPECT_FALSE(check_typing(KindEnv{}, g, m, T("Int -> Int")));
}

TEST(FromSystemF, NestedPrefixesDoNotClash) {
  FTerm t = parse_fterm("(/\\a. single) [Int -> Int] [Int] 5");
  Type want = f_typecheck(KindEnv{}, prelude(), t);
  Term m = from_systemf(KindEnv{}, prelude(), t);
  NameSupply supply;
  InferResult r = infer_checked(KindEnv{}, RefinedKindEnv{}, prelude(),
                                desugar(m), supply);
  EXPECT_TRUE(alpha_eq(r.type, want)) << render_term(m);
}

TEST(FromSystemF, PolymorphicResultOfApplicationHead) {
  FTerm t = parse_fterm("(\\v:Int. /\\c. length) (inc 1) [Int]");
  Type want = f_typecheck(KindEnv{}, prelude(), t);
  ASSERT_TRUE(want.is_forall());
  Term m = from_systemf(KindEnv{}, prelude(), t);
  NameSupply supply;
  InferResult r = infer_checked(KindEnv{}, RefinedKindEnv{}, prelude(),
                                desugar(m), supply);
  EXPECT_TRUE(alpha_eq(r.type, want)) << render_term(m);
}

TEST(FromSystemF, RejectsIllTyped) {
  EXPECT_ANY_THROW(from_systemf(KindEnv{}, TypeEnv{}, parse_fterm("1 1")));
}

TEST(FromSystemF, RoundTripsGeneratedTerms) {
  gen::Rng rng(62);
  gen::FGen g(rng, prelude());
  for (int i = 0; i < 300; ++i) {
    gen::FGen::Typed t = g.term(5);
    Term m = from_systemf(KindEnv{}, prelude(), t.term);
    NameSupply supply;
    try {
      InferResult r = infer_checked(KindEnv{}, RefinedKindEnv{}, prelude(),
                                    desugar(m), supply);
      EXPECT_TRUE(alpha_eq(r.type, t.type)) << render_fterm(t.term);
    } catch (const Error& e) {
      ADD_FAILURE() << render_fterm(t.term) << "\n  as " << render_term(m)
                    << "\n  " << e.what();
    }
  }
}

}  // namespace
