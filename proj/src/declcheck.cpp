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

#include "freezeml/declcheck.hpp"

#include <algorithm>
#include <map>

#include "freezeml/diagnostics.hpp"
#include "freezeml/printer.hpp"
#include "freezeml/statics.hpp"

namespace freezeml {

namespace {

class Matcher {
 public:
  explicit Matcher(const RefinedKindEnv& flex) : flex_(flex) {}

  bool match(const Type& p, const Type& t) {
    if (p.is_var()) {
      long ip = index_of(bound_p_, p.name());
      if (ip >= 0) {
        return t.is_var() && index_of(bound_t_, t.name()) == ip;
      }
      if (flex_.contains(p.name())) return assign(p.name(), t);
      return t.is_var() && index_of(bound_t_, t.name()) < 0 &&
             t.name() == p.name();
    }
    if (p.tag() != t.tag()) return false;
    if (p.is_forall()) {
      bound_p_.push_back(p.name());
      bound_t_.push_back(t.name());
      bool ok = match(p.body(), t.body());
      bound_p_.pop_back();
      bound_t_.pop_back();
      return ok;
    }
    if (p.con() != t.con()) return false;
    for (std::size_t i = 0; i < p.args().size(); ++i) {
      if (!match(p.arg(i), t.arg(i))) return false;
    }
    return true;
  }

  const std::map<std::string, Type>& assigned() const { return assigned_; }

 private:
  static long index_of(const std::vector<std::string>& stack,
                       const std::string& n) {
    for (std::size_t i = stack.size(); i-- > 0;) {
      if (stack[i] == n) return static_cast<long>(stack.size() - i);
    }
    return -1;
  }

  bool assign(const std::string& v, const Type& t) {
    for (const auto& b : bound_t_) {
      if (occurs_free(b, t)) return false;
    }
    auto [it, fresh] = assigned_.emplace(v, t);
    return fresh || alpha_eq(it->second, t);
  }

  const RefinedKindEnv& flex_;
  std::vector<std::string> bound_p_;
  std::vector<std::string> bound_t_;
  std::map<std::string, Type> assigned_;
};

}  // namespace

std::optional<Substitution> match_pairs(
    const KindEnv& delta, const RefinedKindEnv& image_theta,
    const RefinedKindEnv& flex,
    const std::vector<std::pair<Type, Type>>& pairs) {
  Matcher m(flex);
  for (const auto& [p, t] : pairs) {
    if (!m.match(p, t)) return std::nullopt;
  }
  Substitution out;
  for (const auto& [v, k] : flex) {
    auto it = m.assigned().find(v);
    if (it == m.assigned().end()) {
      out.set(v, Type::var(v));
      continue;
    }
    if (!has_kind(delta, image_theta, it->second, k)) return std::nullopt;
    out.set(v, it->second);
  }
  return out;
}

std::optional<Substitution> match_instance(const KindEnv& delta,
                                           const RefinedKindEnv& theta_res,
                                           const Type& a_r, const Type& a0) {
  return match_pairs(delta, RefinedKindEnv{}, theta_res, {{a_r, a0}});
}

bool check_typing(const KindEnv& delta, const TypeEnv& gamma, const Term& m,
                  const Type& a0) {
  Term core = has_sugar(m) ? desugar(m) : m;
  try {
    wellscoped(delta, core);
    env_wf(delta, RefinedKindEnv{}, gamma);
    kind_of(delta, a0);
  } catch (const Error& e) {
    throw Error(ErrorCode::Precondition,
                std::string("typing judgement is ill-formed: ") + e.what(),
                e.span(), e.types());
  }
  NameSupply supply;
  supply.avoid(a0);
  std::optional<InferResult> r;
  try {
    r = infer(delta, RefinedKindEnv{}, gamma, core, supply);
  } catch (const Error&) {
    // No derivation exists when principal inference fails.
    return false;
  }
  return match_instance(delta, r->theta_env, r->type, a0).has_value();
}

namespace {

class RuleWalker {
 public:
  void check(const KindEnv& delta, const TypeEnv& gamma, const Term& m,
             const Derivation& d) {
    using T = Term::Tag;
    if (d.rule != m.tag()) fail(m, "derivation does not follow the term");
    switch (m.tag()) {
      case T::Var: {
        Type a = lookup(gamma, m);
        for (const Type& arg : d.args) {
          if (!a.is_forall()) fail(m, "too many instantiation arguments");
          well_kinded(delta, arg, Kind::Poly, m);
          Type next = apply(TypeMap{{a.name(), arg}}, a.body());
          a = std::move(next);
        }
        if (a.is_forall()) fail(m, "variable is not fully instantiated");
        same(m, d.type, a);
        return;
      }
      case T::Freeze:
        same(m, d.type, lookup(gamma, m));
        return;
      case T::IntLit:
        same(m, d.type, int_type());
        return;
      case T::Lam:
      case T::LamAnn: {
        if (!d.binder_type || d.kids.size() != 1) fail(m, "malformed lambda");
        const Type& s = *d.binder_type;
        if (m.is(T::Lam)) {
          well_kinded(delta, s, Kind::Mono, m);
        } else {
          if (!(s == m.annotation())) fail(m, "parameter type is not the annotation");
          well_kinded(delta, s, Kind::Poly, m);
        }
        check(delta, gamma.with(m.name(), s), m.body(), d.kids[0]);
        same(m, d.type, arrow(s, d.kids[0].type));
        return;
      }
      case T::App: {
        if (d.kids.size() != 2) fail(m, "malformed application");
        check(delta, gamma, m.fn(), d.kids[0]);
        check(delta, gamma, m.arg(), d.kids[1]);
        const Type& f = d.kids[0].type;
        if (!f.is_con(cons::Arrow)) fail(m, "applied term is not a function");
        same(m, d.kids[1].type, f.arg(0));
        same(m, d.type, f.arg(1));
        return;
      }
      case T::Let:
        let(delta, gamma, m, d);
        return;
      case T::LetAnn:
        let_ann(delta, gamma, m, d);
        return;
      case T::Gen:
      case T::Inst:
        fail(m, "term is not desugared");
    }
  }

 private:
  [[noreturn]] static void fail(const Term& m, const std::string& why) {
    throw Error(ErrorCode::TypeMismatch, why, m.span());
  }

  static Type lookup(const TypeEnv& gamma, const Term& m) {
    const Type* t = gamma.lookup(m.name());
    if (!t) fail(m, "unbound variable " + m.name());
    return *t;
  }

  static void same(const Term& m, const Type& got, const Type& want) {
    if (!alpha_eq(got, want)) {
      auto shown = render_types({got, want});
      fail(m, "recorded type " + shown[0] + " but the rule gives " + shown[1]);
    }
  }

  static void well_kinded(const KindEnv& delta, const Type& t, Kind k,
                          const Term& m) {
    auto got = try_kind_of(delta, t);
    if (!got || !kind_leq(*got, k)) {
      fail(m, "type " + render_type(t, false) + " is not well kinded here");
    }
  }

  static KindEnv extend(const KindEnv& delta,
                        const std::vector<std::string>& prefix,
                        const Term& m) {
    try {
      return delta.concat(prefix);
    } catch (const Error&) {
      fail(m, "let prefix rebinds a type variable in scope");
    }
  }

  void let(const KindEnv& delta, const TypeEnv& gamma, const Term& m,
           const Derivation& d) {
    if (!d.binder_type || d.kids.size() != 2) fail(m, "malformed let");
    KindEnv inner = extend(delta, d.prefix, m);
    check(inner, gamma, m.bound(), d.kids[0]);
    const Type& a = d.kids[0].type;
    GenResult g = gen(delta, a, m.bound());
    if (g.all != d.prefix) fail(m, "let prefix is not ftv of the bound type");
    if (is_guarded_value(m.bound())) {
      if (!d.generalised) fail(m, "guarded value was not generalised");
      same(m, *d.binder_type, rebuild(d.prefix, a));
    } else {
      if (d.generalised) fail(m, "non-value was generalised");
      KindEnv from(d.prefix);
      if (!inst_wf(delta, d.inst, from, Kind::Mono, KindEnv{}) ||
          d.inst.size() != d.prefix.size()) {
        fail(m, "let instantiation is not monomorphic over the context");
      }
      same(m, *d.binder_type, apply(d.inst, a));
    }
    check(delta, gamma.with(m.name(), *d.binder_type), m.body(), d.kids[1]);
    same(m, d.type, d.kids[1].type);
  }

  void let_ann(const KindEnv& delta, const TypeEnv& gamma, const Term& m,
               const Derivation& d) {
    if (!d.binder_type || d.kids.size() != 2) fail(m, "malformed let");
    const Type& ann = m.annotation();
    if (!(*d.binder_type == ann)) fail(m, "bound type is not the annotation");
    well_kinded(delta, ann, Kind::Poly, m);
    Split sp = split(ann, m.bound());
    if (sp.prefix != d.prefix) fail(m, "let prefix does not split the annotation");
    KindEnv inner = extend(delta, d.prefix, m);
    check(inner, gamma, m.bound(), d.kids[0]);
    same(m, d.kids[0].type, sp.body);
    check(delta, gamma.with(m.name(), ann), m.body(), d.kids[1]);
    same(m, d.type, d.kids[1].type);
  }
};

}  // namespace

std::optional<std::string> check_derivation(const KindEnv& delta,
                                            const TypeEnv& gamma,
                                            const Term& m,
                                            const Derivation& d) {
  try {
    RuleWalker{}.check(delta, gamma, m, d);
    return std::nullopt;
  } catch (const Error& e) {
    return std::string(e.what());
  }
}

}  // namespace freezeml
