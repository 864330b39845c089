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

// Seeded random generators for types, substitutions, FreezeML terms, ML
// terms and well-typed System F terms.

#ifndef FREEZEML_TESTS_GENERATORS_HPP
#define FREEZEML_TESTS_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "freezeml/env.hpp"
#include "freezeml/prelude.hpp"
#include "freezeml/subst.hpp"
#include "freezeml/systemf.hpp"
#include "freezeml/term.hpp"
#include "freezeml/type.hpp"

namespace gen {

using freezeml::Kind;
using freezeml::Term;
using freezeml::Type;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(eng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------- types

struct TypeShape {
  std::vector<std::string> free;  // names that may occur free
  bool foralls = true;            // allow quantifiers anywhere
  bool st = true;                 // allow the ST constructor
};

// Random type whose free variables are drawn from shape.free. Bound names
// come from a small pool so shadowing and capture situations arise.
inline Type random_type(Rng& rng, const TypeShape& shape, int depth,
                        std::vector<std::string> bound = {}) {
  static const std::vector<std::string> pool = {"q", "r", "s"};
  std::size_t nvars = shape.free.size() + bound.size();
  if (depth <= 0 || rng.chance(0.3)) {
    if (nvars > 0 && rng.chance(0.6)) {
      std::size_t i = rng.below(nvars);
      return Type::var(i < shape.free.size() ? shape.free[i]
                                             : bound[i - shape.free.size()]);
    }
    return rng.chance(0.6) ? freezeml::int_type() : freezeml::bool_type();
  }
  std::size_t choice = rng.below(shape.foralls ? 6 : 5);
  switch (choice) {
    case 0:
      return freezeml::list_type(random_type(rng, shape, depth - 1, bound));
    case 1:
    case 2:
      return freezeml::arrow(random_type(rng, shape, depth - 1, bound),
                             random_type(rng, shape, depth - 1, bound));
    case 3:
      return freezeml::pair_type(random_type(rng, shape, depth - 1, bound),
                                 random_type(rng, shape, depth - 1, bound));
    case 4:
      if (shape.st) {
        return freezeml::st_type(random_type(rng, shape, depth - 1, bound),
                                 random_type(rng, shape, depth - 1, bound));
      }
      return freezeml::arrow(random_type(rng, shape, depth - 1, bound),
                             random_type(rng, shape, depth - 1, bound));
    default: {
      std::string b = rng.pick(pool);
      bound.push_back(b);
      return Type::forall(b, random_type(rng, shape, depth - 1, bound));
    }
  }
}

inline Type random_mono(Rng& rng, const std::vector<std::string>& free,
                        int depth) {
  return random_type(rng, TypeShape{free, false, true}, depth);
}

// Closed types used as polymorphic images and annotations.
inline const std::vector<Type>& poly_samples() {
  static const std::vector<Type> v = [] {
    Type a = Type::var("a"), b = Type::var("b");
    Type id = Type::forall("a", freezeml::arrow(a, a));
    return std::vector<Type>{
        id,
        Type::forall("a", Type::forall("b", freezeml::arrow(a, freezeml::arrow(b, b)))),
        freezeml::list_type(id),
        freezeml::arrow(id, id),
        freezeml::arrow(freezeml::int_type(), id),
        Type::forall("a", freezeml::list_type(a)),
    };
  }();
  return v;
}

// A closed image respecting kind k.
inline Type closed_image(Rng& rng, Kind k) {
  if (k == Kind::Poly && rng.chance(0.5)) return rng.pick(poly_samples());
  return random_mono(rng, {}, 2);
}

// ------------------------------------------------- unification instances

struct UnifyInstance {
  freezeml::KindEnv delta;
  freezeml::RefinedKindEnv theta;
  Type a = freezeml::int_type();
  Type b = freezeml::int_type();
};

// Replaces random subterms of t that do not mention locally bound names by
// flexible variables.
inline Type punch(Rng& rng, const Type& t, const std::vector<std::string>& flex,
                  std::vector<std::string>& bound, double p) {
  bool closed_locally = std::none_of(bound.begin(), bound.end(),
                                     [&](const std::string& b) {
                                       return freezeml::occurs_free(b, t);
                                     });
  if (closed_locally && !flex.empty() && rng.chance(p)) {
    return Type::var(rng.pick(flex));
  }
  if (t.is_var()) return t;
  if (t.is_forall()) {
    bound.push_back(t.name());
    Type body = punch(rng, t.body(), flex, bound, p);
    bound.pop_back();
    return Type::forall(t.name(), body);
  }
  std::vector<Type> args;
  for (const auto& a : t.args()) args.push_back(punch(rng, a, flex, bound, p));
  return Type::con(t.con(), std::move(args));
}

inline UnifyInstance random_unify_instance(Rng& rng) {
  UnifyInstance u;
  std::size_t nd = rng.below(3);
  std::vector<std::string> rigid, flex;
  for (std::size_t i = 0; i < nd; ++i) {
    rigid.push_back("r" + std::to_string(i));
    u.delta.push(rigid.back());
  }
  std::size_t nf = 1 + rng.below(4);
  for (std::size_t i = 0; i < nf; ++i) {
    flex.push_back("f" + std::to_string(i));
    u.theta.push(flex.back(), rng.chance(0.5) ? Kind::Mono : Kind::Poly);
  }
  std::vector<std::string> all = rigid;
  all.insert(all.end(), flex.begin(), flex.end());
  TypeShape shape{all, true, true};
  if (rng.chance(0.75)) {
    // Two punched copies of one skeleton: usually unifiable.
    Type skel = random_type(rng, TypeShape{rigid, true, true}, 4);
    std::vector<std::string> bound;
    u.a = punch(rng, skel, flex, bound, 0.25);
    u.b = punch(rng, skel, flex, bound, 0.25);
  } else {
    u.a = random_type(rng, shape, 3);
    u.b = random_type(rng, shape, 3);
  }
  return u;
}

struct CompletenessInstance {
  freezeml::KindEnv delta;
  freezeml::RefinedKindEnv theta;        // Θ, the domain of sigma
  freezeml::RefinedKindEnv theta_prime;  // Θ′, the images' environment
  freezeml::Substitution sigma;          // a unifier, Δ ⊢ σ : Θ ⇒ Θ′
  Type a = freezeml::int_type();
  Type b = freezeml::int_type();
};

// Θ = solved variables x_i plus kept variables y_j; σ maps each x_i to a
// type over Δ and the y_j (respecting x_i's kind) and is the identity on
// the y_j. B is A with some x_i occurrences replaced by σ(x_i), and some
// subterms equal to an image σ(x_i) folded back to x_i, so σA = σB.
inline CompletenessInstance random_completeness_instance(Rng& rng) {
  CompletenessInstance c;
  std::vector<std::string> rigid, solved, kept;
  for (std::size_t i = 0, n = rng.below(3); i < n; ++i) {
    rigid.push_back("r" + std::to_string(i));
    c.delta.push(rigid.back());
  }
  std::vector<std::pair<std::string, Kind>> kept_kinds;
  for (std::size_t i = 0, n = 1 + rng.below(3); i < n; ++i) {
    kept.push_back("y" + std::to_string(i));
    kept_kinds.emplace_back(kept.back(), rng.chance(0.5) ? Kind::Mono : Kind::Poly);
  }
  std::vector<std::string> mono_names = rigid;
  for (const auto& [y, k] : kept_kinds) {
    if (k == Kind::Mono) mono_names.push_back(y);
  }
  std::vector<std::string> img_names = rigid;
  img_names.insert(img_names.end(), kept.begin(), kept.end());
  std::vector<Type> images;
  for (std::size_t i = 0, n = 1 + rng.below(3); i < n; ++i) {
    solved.push_back("x" + std::to_string(i));
    Kind k = rng.chance(0.5) ? Kind::Mono : Kind::Poly;
    c.theta.push(solved.back(), k);
    Type img = k == Kind::Mono ? random_mono(rng, mono_names, 2)
                               : random_type(rng, TypeShape{img_names, true, true}, 3);
    c.sigma.set(solved.back(), img);
    images.push_back(img);
  }
  for (const auto& [y, k] : kept_kinds) {
    c.theta.push(y, k);
    c.theta_prime.push(y, k);
    c.sigma.set(y, Type::var(y));
  }
  std::vector<std::string> dom = rigid;
  dom.insert(dom.end(), solved.begin(), solved.end());
  dom.insert(dom.end(), kept.begin(), kept.end());
  c.a = random_type(rng, TypeShape{dom, true, true}, 4);

  // B folds some occurrences of an image in σA back to the solved variable.
  struct Fold {
    Rng& rng;
    const std::vector<std::string>& solved;
    const std::vector<Type>& images;
    std::vector<std::string> bound;

    Type run(const Type& t) {
      bool closed_locally = std::none_of(
          bound.begin(), bound.end(),
          [&](const std::string& b) { return freezeml::occurs_free(b, t); });
      if (closed_locally) {
        for (std::size_t i = 0; i < solved.size(); ++i) {
          if (freezeml::alpha_eq(t, images[i]) && rng.chance(0.7)) {
            return Type::var(solved[i]);
          }
        }
      }
      if (t.is_var()) return t;
      if (t.is_forall()) {
        bound.push_back(t.name());
        Type body = run(t.body());
        bound.pop_back();
        return Type::forall(t.name(), body);
      }
      std::vector<Type> args;
      for (const auto& a : t.args()) args.push_back(run(a));
      return Type::con(t.con(), std::move(args));
    }
  };
  Fold fold{rng, solved, images, {}};
  c.b = fold.run(freezeml::apply(c.sigma, c.a));
  return c;
}

// --------------------------------------------------------- FreezeML terms

struct TermShape {
  bool freeze = true;
  bool annotations = true;
  bool sugar = true;
  std::vector<std::string> globals;  // names from Γ
};

inline std::vector<std::string> names_of(const freezeml::TypeEnv& gamma) {
  std::vector<std::string> out;
  for (const auto& [x, t] : gamma) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

class TermGen {
 public:
  TermGen(Rng& rng, TermShape shape) : rng_(rng), shape_(std::move(shape)) {}

  Term term(int depth) {
    std::vector<std::string> locals;
    return go(depth, locals);
  }

 private:
  std::string variable(const std::vector<std::string>& locals) {
    if (!locals.empty() && rng_.chance(0.6)) return rng_.pick(locals);
    return rng_.pick(shape_.globals);
  }

  Term leaf(const std::vector<std::string>& locals) {
    std::size_t r = rng_.below(10);
    if (r == 0) return Term::int_lit(static_cast<std::int64_t>(rng_.below(100)));
    if (shape_.freeze && r <= 2) return Term::freeze(variable(locals));
    return Term::var(variable(locals));
  }

  Term go(int depth, std::vector<std::string>& locals) {
    if (depth <= 0) return leaf(locals);
    std::size_t r = rng_.below(shape_.sugar ? 12 : 10);
    switch (r) {
      case 0:
      case 1:
        return leaf(locals);
      case 2:
      case 3:
      case 4: {
        Term f = go(depth - 1, locals);
        Term a = go(depth - 1, locals);
        return Term::app(std::move(f), std::move(a));
      }
      case 5:
      case 6: {
        std::string x = "x" + std::to_string(counter_++);
        locals.push_back(x);
        Term body = go(depth - 1, locals);
        locals.pop_back();
        if (shape_.annotations && rng_.chance(0.3)) {
          return Term::lam_ann(x, rng_.pick(annotations()), std::move(body));
        }
        return Term::lam(x, std::move(body));
      }
      case 7:
      case 8:
      case 9: {
        std::string x = "x" + std::to_string(counter_++);
        Term bound = go(depth - 1, locals);
        locals.push_back(x);
        Term body = go(depth - 1, locals);
        locals.pop_back();
        if (shape_.annotations && rng_.chance(0.25)) {
          return Term::let_ann(x, fresh_prefix(rng_.pick(annotations())),
                               std::move(bound), std::move(body));
        }
        return Term::let(x, std::move(bound), std::move(body));
      }
      case 10:
        return Term::gen(go(depth - 1, locals));
      default:
        return Term::inst(go(depth - 1, locals));
    }
  }

  static const std::vector<Type>& annotations() {
    static const std::vector<Type> v = [] {
      std::vector<Type> out = poly_samples();
      out.push_back(freezeml::int_type());
      out.push_back(freezeml::arrow(freezeml::int_type(), freezeml::int_type()));
      return out;
    }();
    return v;
  }

  // Renames the top-level prefix so nested annotated lets never rebind a
  // name that an enclosing let already put in scope.
  Type fresh_prefix(const Type& t) {
    freezeml::Decomposed d = freezeml::decompose(t);
    freezeml::TypeMap m;
    std::vector<std::string> prefix;
    for (const auto& a : d.prefix) {
      prefix.push_back(a + std::to_string(counter_++));
      m.set(a, Type::var(prefix.back()));
    }
    return freezeml::rebuild(prefix, freezeml::apply(m, d.body));
  }

  Rng& rng_;
  TermShape shape_;
  int counter_ = 0;
};

inline Term random_freezeml_term(Rng& rng, int depth) {
  TermShape shape;
  shape.globals = names_of(freezeml::prelude());
  return TermGen(rng, shape).term(depth);
}

inline Term random_ml_term(Rng& rng, int depth) {
  TermShape shape{false, false, false, names_of(freezeml::ml_prelude())};
  return TermGen(rng, shape).term(depth);
}

// ------------------------------------------------------- System F terms

// Builds well-typed System F terms by construction, synthesising a term
// together with its type.
class FGen {
 public:
  using FTerm = freezeml::FTerm;

  FGen(Rng& rng, freezeml::TypeEnv gamma) : rng_(rng), globals_(std::move(gamma)) {}

  struct Typed {
    FTerm term;
    Type type;
  };

  Typed term(int depth) {
    Ctx ctx{{}, globals_};
    return synth(ctx, depth, false);
  }

 private:
  struct Ctx {
    freezeml::KindEnv delta;
    freezeml::TypeEnv gamma;
  };

  std::string fresh_tyvar(const Ctx& ctx) {
    for (;;) {
      std::string a = std::string(1, static_cast<char>('a' + rng_.below(4)));
      if (rng_.chance(0.5)) a += std::to_string(counter_++);
      if (!ctx.delta.contains(a)) return a;
    }
  }

  Type random_type_in(const Ctx& ctx) {
    return random_type(rng_, TypeShape{ctx.delta.names(), rng_.chance(0.4), false}, 2);
  }

  Typed var(const Ctx& ctx) {
    const auto& b = ctx.gamma.bindings();
    // Locals sit at the end; prefer them half of the time.
    std::size_t i = rng_.chance(0.5)
                        ? b.size() - 1 - rng_.below(std::min<std::size_t>(b.size(), 4))
                        : rng_.below(b.size());
    const std::string& x = b[i].first;
    return {FTerm::var(x), *ctx.gamma.lookup(x)};
  }

  // Instantiates a polymorphic term at random types, sometimes.
  Typed maybe_ty_app(const Ctx& ctx, Typed t) {
    while (t.type.is_forall() && rng_.chance(0.6)) {
      Type arg = random_type_in(ctx);
      Type next = freezeml::apply(freezeml::TypeMap{{t.type.name(), arg}}, t.type.body());
      t = {FTerm::ty_app(std::move(t.term), arg), std::move(next)};
    }
    return t;
  }

  Typed synth(const Ctx& ctx, int depth, bool value) {
    if (depth <= 1) return maybe_ty_app(ctx, var(ctx));
    std::size_t r = rng_.below(value ? 4 : 7);
    switch (r) {
      case 0:
        return maybe_ty_app(ctx, var(ctx));
      case 1: {
        std::string x = "v" + std::to_string(counter_++);
        Type a = random_type_in(ctx);
        Ctx inner = ctx;
        inner.gamma.push(x, a);
        Typed body = synth(inner, depth - 1, false);
        return {FTerm::lam(x, a, body.term), freezeml::arrow(a, body.type)};
      }
      case 2: {
        std::string a = fresh_tyvar(ctx);
        Ctx inner = ctx;
        inner.delta.push(a);
        Typed body = synth(inner, depth - 1, true);
        return {FTerm::ty_abs(a, body.term), Type::forall(a, body.type)};
      }
      case 3: {
        // Let-redex; a value when both parts are.
        std::string x = "v" + std::to_string(counter_++);
        Typed bound = synth(ctx, depth - 1, value);
        Ctx inner = ctx;
        inner.gamma.push(x, bound.type);
        Typed body = synth(inner, depth - 1, value);
        return {freezeml::f_let(x, bound.type, bound.term, body.term), body.type};
      }
      case 4:
        if (rng_.chance(0.3)) return {FTerm::int_lit(static_cast<std::int64_t>(rng_.below(10))), freezeml::int_type()};
        [[fallthrough]];
      default: {
        Typed f = synth(ctx, depth - 1, false);
        while (f.type.is_forall()) {
          Type arg = random_type_in(ctx);
          Type next = freezeml::apply(freezeml::TypeMap{{f.type.name(), arg}}, f.type.body());
          f = {FTerm::ty_app(std::move(f.term), arg), std::move(next)};
        }
        if (!f.type.is_con(freezeml::cons::Arrow)) return f;
        std::optional<FTerm> x = check(ctx, f.type.arg(0), depth - 1);
        if (!x) return f;
        return {FTerm::app(f.term, *x), f.type.arg(1)};
      }
    }
  }

  // A term of exactly type want, if one is found quickly.
  std::optional<FTerm> check(const Ctx& ctx, const Type& want, int depth) {
    for (const auto& [x, t] : ctx.gamma) {
      if (freezeml::alpha_eq(*ctx.gamma.lookup(x), want) && rng_.chance(0.5)) {
        return FTerm::var(x);
      }
    }
    if (want.is_forall()) {
      std::string a = want.name();
      Type body = want.body();
      if (ctx.delta.contains(a)) {
        std::string b = fresh_tyvar(ctx);
        body = freezeml::apply(freezeml::TypeMap{{a, Type::var(b)}}, body);
        a = b;
      }
      Ctx inner = ctx;
      inner.delta.push(a);
      auto v = check_value(inner, body, depth);
      if (!v) return std::nullopt;
      return FTerm::ty_abs(a, *v);
    }
    if (want.is_con(freezeml::cons::Arrow)) {
      std::string x = "v" + std::to_string(counter_++);
      Ctx inner = ctx;
      inner.gamma.push(x, want.arg(0));
      auto body = check(inner, want.arg(1), depth - 1);
      if (!body) return std::nullopt;
      return FTerm::lam(x, want.arg(0), *body);
    }
    return base(ctx, want);
  }

  std::optional<FTerm> check_value(const Ctx& ctx, const Type& want, int depth) {
    if (want.is_forall() || want.is_con(freezeml::cons::Arrow)) {
      return check(ctx, want, depth);
    }
    for (const auto& [x, t] : ctx.gamma) {
      if (freezeml::alpha_eq(*ctx.gamma.lookup(x), want)) return FTerm::var(x);
    }
    auto b = base(ctx, want);
    if (b && freezeml::is_f_value(*b)) return b;
    return std::nullopt;
  }

  std::optional<FTerm> base(const Ctx& ctx, const Type& want) {
    using freezeml::cons::Bool;
    using freezeml::cons::Int;
    using freezeml::cons::List;
    using freezeml::cons::Pair;
    if (want.is_con(Int)) return FTerm::int_lit(static_cast<std::int64_t>(rng_.below(10)));
    if (want.is_con(Bool)) return FTerm::var(rng_.chance(0.5) ? "True" : "False");
    if (want.is_con(List) && ctx.gamma.lookup("[]")) {
      return FTerm::ty_app(FTerm::var("[]"), want.arg(0));
    }
    if (want.is_con(Pair) && ctx.gamma.lookup("pair")) {
      auto a = check(ctx, want.arg(0), 1);
      auto b = check(ctx, want.arg(1), 1);
      if (!a || !b) return std::nullopt;
      FTerm p = FTerm::ty_app(FTerm::ty_app(FTerm::var("pair"), want.arg(0)), want.arg(1));
      return FTerm::app(FTerm::app(p, *a), *b);
    }
    for (const auto& [x, t] : ctx.gamma) {
      if (freezeml::alpha_eq(*ctx.gamma.lookup(x), want)) return FTerm::var(x);
    }
    return std::nullopt;
  }

  Rng& rng_;
  freezeml::TypeEnv globals_;
  int counter_ = 0;
};

// Maximum nesting depth of an F term.
inline int f_depth(const freezeml::FTerm& t) {
  using T = freezeml::FTerm::Tag;
  switch (t.tag()) {
    case T::Var:
    case T::IntLit:
      return 1;
    case T::Lam:
    case T::TyAbs:
      return 1 + f_depth(t.body());
    case T::TyApp:
      return 1 + f_depth(t.fn());
    case T::App:
      return 1 + std::max(f_depth(t.fn()), f_depth(t.arg()));
  }
  return 1;
}

}  // namespace gen

#endif  // FREEZEML_TESTS_GENERATORS_HPP
