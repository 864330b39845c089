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

#include "freezeml/translate.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "freezeml/diagnostics.hpp"
#include "freezeml/statics.hpp"
#include "freezeml/subst.hpp"

namespace freezeml {

Elaboration rebuild_derivation(const KindEnv& delta, const TypeEnv& gamma,
                               const Term& m, Residuals mode) {
  Term core = has_sugar(m) ? desugar(m) : m;
  NameSupply supply;
  InferResult r = infer_checked(delta, RefinedKindEnv{}, gamma, core, supply,
                                InferOptions{true});
  Elaboration e{core, delta, std::move(*r.derivation), r.type};
  if (mode == Residuals::Rigid) {
    for (const auto& [v, k] : r.theta_env) e.delta.push(v);
    return e;
  }
  Substitution ground;
  for (const auto& [v, k] : r.theta_env) ground.set(v, int_type());
  e.derivation = apply(ground, e.derivation);
  e.type = apply(ground, e.type);
  return e;
}

FTerm to_systemf(const Derivation& d) {
  using T = Term::Tag;
  auto kid = [&d](std::size_t i) -> const Derivation& {
    if (i >= d.kids.size()) {
      throw Error(ErrorCode::Internal, "malformed derivation node");
    }
    return d.kids[i];
  };
  auto binder = [&d]() -> const Type& {
    if (!d.binder_type) {
      throw Error(ErrorCode::Internal, "derivation node lacks a binder type");
    }
    return *d.binder_type;
  };
  switch (d.rule) {
    case T::Var:
      return f_ty_app(FTerm::var(d.name), d.args);
    case T::Freeze:
      return FTerm::var(d.name);
    case T::IntLit:
      return FTerm::int_lit(d.value);
    case T::Lam:
    case T::LamAnn:
      return FTerm::lam(d.name, binder(), to_systemf(kid(0)));
    case T::App:
      return FTerm::app(to_systemf(kid(0)), to_systemf(kid(1)));
    case T::Let:
    case T::LetAnn: {
      FTerm bound = to_systemf(kid(0));
      bound = d.generalised ? f_ty_abs(d.prefix, std::move(bound))
                            : apply(d.inst, bound);
      return f_let(d.name, binder(), std::move(bound), to_systemf(kid(1)));
    }
    case T::Gen:
    case T::Inst:
      break;
  }
  throw Error(ErrorCode::Internal, "derivation of a sugared term");
}

namespace {

bool contains(const std::vector<std::string>& v, const std::string& n) {
  return std::find(v.begin(), v.end(), n) != v.end();
}

class Importer {
 public:
  explicit Importer(bool naive) : naive_(naive) {}

  // delta is the System F context of t. scope holds the FreezeML type
  // variables in scope at the output position, which also include the
  // quantifier prefixes of enclosing annotated lets.
  Term run(const KindEnv& delta, const std::vector<std::string>& scope,
           const TypeEnv& gamma, const FTerm& t) {
    switch (t.tag()) {
      case FTerm::Tag::Var: {
        // Freezing a variable of guarded type changes nothing, so only
        // polymorphic variables are frozen.
        const Type* a = gamma.lookup(t.name());
        if (a && !a->is_forall()) return Term::var(t.name());
        return Term::freeze(t.name());
      }
      case FTerm::Tag::IntLit:
        return Term::int_lit(t.int_value());
      case FTerm::Tag::Lam:
        return Term::lam_ann(
            t.name(), t.type(),
            run(delta, scope, gamma.with(t.name(), t.type()), t.body()));
      case FTerm::Tag::App: {
        const FTerm& f = t.fn();
        if (f.is(FTerm::Tag::Lam) && is_f_value(f.body()) &&
            is_f_value(t.arg())) {
          // A let-bound value stays a value: let (x:A) = V in W.
          return Term::let_ann(
              f.name(), f.type(), run(delta, scope, gamma, t.arg()),
              run(delta, scope, gamma.with(f.name(), f.type()), f.body()));
        }
        return Term::app(run(delta, scope, gamma, f),
                         run(delta, scope, gamma, t.arg()));
      }
      case FTerm::Tag::TyAbs: {
        KindEnv inner = delta;
        inner.push(t.name());
        Type body_type = f_typecheck(inner, gamma, t.body());
        Type ann = Type::forall(t.name(), body_type);
        ann = freshen_prefix(ann, 1, scope, t);
        Term v = run(inner, extend(scope, ann), gamma, t.body());
        return wrap(ann, Term::inst(std::move(v)));
      }
      case FTerm::Tag::TyApp: {
        Type f = f_typecheck(delta, gamma, t.fn());
        if (!f.is_forall()) {
          throw Error(ErrorCode::Precondition,
                      "imported term does not typecheck in System F");
        }
        Type ann = apply(TypeMap{{f.name(), t.type()}}, f.body());
        ann = freshen_prefix(ann, 0, scope, t);
        Term m = run(delta, extend(scope, ann), gamma, t.fn());
        if (naive_) return wrap(ann, std::move(m));
        if (ann.is_forall() && !is_f_value(t.fn())) {
          // (N)@ is guarded only when N is a value, so an application head
          // is bound first and the instantiation applies to the variable.
          return Term::let_ann("z", f, std::move(m),
                               wrap(ann, Term::inst(Term::freeze("z"))));
        }
        return wrap(ann, Term::inst(std::move(m)));
      }
    }
    throw Error(ErrorCode::Internal, "unknown System F term");
  }

 private:
  static Term wrap(const Type& ann, Term bound) {
    return Term::let_ann("y", ann, std::move(bound), Term::freeze("y"));
  }

  static std::vector<std::string> extend(std::vector<std::string> scope,
                                         const Type& ann) {
    for (auto& a : decompose(ann).prefix) scope.push_back(std::move(a));
    return scope;
  }

  // Renames the annotation's quantifier prefix, from position `keep` on,
  // away from the names in scope and every type name in the translated
  // subterm, so the prefix the let abstracts cannot clash with an enclosing
  // or a nested annotation.
  static Type freshen_prefix(const Type& ann, std::size_t keep,
                             const std::vector<std::string>& scope,
                             const FTerm& t) {
    std::vector<std::string> inner;
    collect_type_names(t, inner);
    std::vector<std::string> avoid = scope;
    avoid.insert(avoid.end(), inner.begin(), inner.end());
    collect_names(ann, avoid);
    std::vector<std::string> prefix;
    Type cur = ann;
    for (std::size_t i = 0; cur.is_forall(); ++i) {
      std::string b = cur.name();
      Type body = cur.body();
      bool clash = contains(scope, b) || contains(inner, b) || contains(prefix, b);
      if (i >= keep && clash) {
        std::string fresh = b;
        do {
          fresh += '\'';
        } while (contains(avoid, fresh));
        avoid.push_back(fresh);
        body = apply(TypeMap{{b, Type::var(fresh)}}, body);
        b = std::move(fresh);
      }
      prefix.push_back(std::move(b));
      cur = std::move(body);
    }
    return rebuild(prefix, std::move(cur));
  }

  bool naive_;
};

}  // namespace

Term from_systemf(const KindEnv& delta, const TypeEnv& gamma, const FTerm& t,
                  bool naive) {
  f_typecheck(delta, gamma, t);
  return Importer(naive).run(delta, delta.names(), gamma, t);
}

}  // namespace freezeml
