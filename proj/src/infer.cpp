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

#include "freezeml/infer.hpp"

#include <algorithm>
#include <utility>

#include "freezeml/diagnostics.hpp"
#include "freezeml/printer.hpp"
#include "freezeml/statics.hpp"
#include "freezeml/unify.hpp"

namespace freezeml {

GenResult gen(const KindEnv& delta, const Type& a, const Term& m) {
  GenResult g;
  for (auto& v : ftv_ordered(a)) {
    if (!delta.contains(v)) g.all.push_back(std::move(v));
  }
  if (is_guarded_value(m)) g.generalised = g.all;
  return g;
}

Split split(const Type& a, const Term& m) {
  if (!is_guarded_value(m)) return Split{{}, a};
  Decomposed d = decompose(a);
  return Split{std::move(d.prefix), std::move(d.body)};
}

Derivation apply(const TypeMap& m, const Derivation& d) {
  Derivation out;
  out.rule = d.rule;
  out.name = d.name;
  out.value = d.value;
  out.type = apply(m, d.type);
  if (d.binder_type) out.binder_type = apply(m, *d.binder_type);
  out.args.reserve(d.args.size());
  for (const Type& t : d.args) out.args.push_back(apply(m, t));
  out.prefix = d.prefix;
  out.generalised = d.generalised;
  for (const auto& [c, t] : d.inst) out.inst.set(c, apply(m, t));
  out.kids.reserve(d.kids.size());
  for (const Derivation& k : d.kids) out.kids.push_back(apply(m, k));
  return out;
}

namespace {

struct Step {
  RefinedKindEnv theta;
  Substitution subst;
  Type type;
  Derivation deriv;
};

class Engine {
 public:
  Engine(NameSupply& supply, bool record) : supply_(supply), record_(record) {}

  Step run(const KindEnv& delta, const RefinedKindEnv& theta,
           const TypeEnv& gamma, const Term& m) {
    try {
      return dispatch(delta, theta, gamma, m);
    } catch (Error& e) {
      e.locate(m.span());
      throw;
    }
  }

 private:
  Step dispatch(const KindEnv& delta, const RefinedKindEnv& theta,
                const TypeEnv& gamma, const Term& m) {
    using T = Term::Tag;
    switch (m.tag()) {
      case T::Var: return var(theta, gamma, m);
      case T::Freeze: return freeze(theta, gamma, m);
      case T::IntLit: return int_lit(theta, m);
      case T::Lam: return lam(delta, theta, gamma, m);
      case T::LamAnn: return lam_ann(delta, theta, gamma, m);
      case T::App: return app(delta, theta, gamma, m);
      case T::Let: return let(delta, theta, gamma, m);
      case T::LetAnn: return let_ann(delta, theta, gamma, m);
      case T::Gen:
      case T::Inst:
        break;
    }
    throw Error(ErrorCode::Precondition,
                "inference expects a desugared term", m.span());
  }

  Derivation node(const Term& m, const Type& t) {
    Derivation d;
    if (!record_) return d;
    d.rule = m.tag();
    d.name = m.name();
    d.type = t;
    if (m.is(Term::Tag::IntLit)) d.value = m.int_value();
    return d;
  }

  Derivation sub(const TypeMap& s, const Derivation& d) const {
    return record_ ? apply(s, d) : Derivation{};
  }

  static const Type& lookup(const TypeEnv& gamma, const Term& m) {
    const Type* t = gamma.lookup(m.name());
    if (!t) {
      throw Error(ErrorCode::UnboundVar, "unbound variable " + m.name(),
                  m.span());
    }
    return *t;
  }

  Step var(const RefinedKindEnv& theta, const TypeEnv& gamma, const Term& m) {
    Type body = lookup(gamma, m);
    RefinedKindEnv out = theta;
    std::vector<Type> args;
    while (body.is_forall()) {
      std::string b = supply_.fresh();
      out.push(b, Kind::Poly);
      Type bv = Type::var(b);
      Type next = apply(TypeMap{{body.name(), bv}}, body.body());
      body = std::move(next);
      args.push_back(std::move(bv));
    }
    Derivation d = node(m, body);
    if (record_) d.args = std::move(args);
    return Step{std::move(out), identity_subst(theta), std::move(body),
                std::move(d)};
  }

  Step freeze(const RefinedKindEnv& theta, const TypeEnv& gamma,
              const Term& m) {
    const Type& t = lookup(gamma, m);
    return Step{theta, identity_subst(theta), t, node(m, t)};
  }

  Step int_lit(const RefinedKindEnv& theta, const Term& m) {
    return Step{theta, identity_subst(theta), int_type(), node(m, int_type())};
  }

  Step lam(const KindEnv& delta, const RefinedKindEnv& theta,
           const TypeEnv& gamma, const Term& m) {
    std::string a = supply_.fresh();
    Step r = run(delta, theta.with(a, Kind::Mono),
                 gamma.with(m.name(), Type::var(a)), m.body());
    Type s = r.subst(a);
    Type t = arrow(s, r.type);
    Derivation d = node(m, t);
    if (record_) {
      d.binder_type = s;
      d.kids.push_back(std::move(r.deriv));
    }
    return Step{std::move(r.theta), r.subst.without(a), std::move(t),
                std::move(d)};
  }

  Step lam_ann(const KindEnv& delta, const RefinedKindEnv& theta,
               const TypeEnv& gamma, const Term& m) {
    Step r = run(delta, theta, gamma.with(m.name(), m.annotation()), m.body());
    Type t = arrow(m.annotation(), r.type);
    Derivation d = node(m, t);
    if (record_) {
      d.binder_type = m.annotation();
      d.kids.push_back(std::move(r.deriv));
    }
    return Step{std::move(r.theta), std::move(r.subst), std::move(t),
                std::move(d)};
  }

  Step app(const KindEnv& delta, const RefinedKindEnv& theta,
           const TypeEnv& gamma, const Term& m) {
    Step r1 = run(delta, theta, gamma, m.fn());
    Step r2 = run(delta, r1.theta, apply(r1.subst, gamma), m.arg());
    std::string b = supply_.fresh();
    UnifyResult u =
        unify(delta, r2.theta.with(b, Kind::Poly), apply(r2.subst, r1.type),
              arrow(r2.type, Type::var(b)), supply_);
    Type result = u.subst(b);
    Substitution theta3 = u.subst.without(b);
    Derivation d = node(m, result);
    if (record_) {
      d.kids.push_back(sub(theta3, sub(r2.subst, r1.deriv)));
      d.kids.push_back(sub(theta3, r2.deriv));
    }
    Substitution total = compose(theta3, compose(r2.subst, r1.subst));
    return Step{std::move(u.theta_env), std::move(total), std::move(result),
                std::move(d)};
  }

  Step let(const KindEnv& delta, const RefinedKindEnv& theta,
           const TypeEnv& gamma, const Term& m) {
    Step r1 = run(delta, theta, gamma, m.bound());
    KindEnv outer = delta;
    for (const auto& v : ftv(r1.subst)) {
      if (!outer.contains(v)) outer.push(v);
    }
    GenResult g = gen(outer, r1.type, m.bound());
    RefinedKindEnv theta1 = demote(Kind::Mono, r1.theta, g.all);
    Type scheme = rebuild(g.generalised, r1.type);
    Step r2 = run(delta, theta1.without(g.generalised),
                  apply(r1.subst, gamma).with(m.name(), scheme), m.body());
    Derivation d = node(m, r2.type);
    if (record_) {
      Derivation bound = std::move(r1.deriv);
      d.binder_type = scheme;
      if (is_guarded_value(m.bound())) {
        d.generalised = true;
        d.prefix = g.generalised;
      } else {
        // The monomorphically instantiated variables become local rigid
        // names inside the bound term; inst records what they stand for.
        TypeMap rename;
        for (const auto& v : g.all) {
          std::string c = supply_.fresh();
          rename.set(v, Type::var(c));
          d.inst.set(c, Type::var(v));
          d.prefix.push_back(std::move(c));
        }
        bound = apply(rename, bound);
      }
      d.kids.push_back(sub(r2.subst, bound));
      d.kids.push_back(std::move(r2.deriv));
      d = finish_let(std::move(d), r2.subst);
    }
    return Step{std::move(r2.theta), compose(r2.subst, r1.subst),
                std::move(r2.type), std::move(d)};
  }

  // Pushes the body's substitution into the let node's own annotations.
  static Derivation finish_let(Derivation d, const Substitution& s) {
    if (d.binder_type) d.binder_type = apply(s, *d.binder_type);
    Instantiation inst;
    for (const auto& [c, t] : d.inst) inst.set(c, apply(s, t));
    d.inst = std::move(inst);
    return d;
  }

  Step let_ann(const KindEnv& delta, const RefinedKindEnv& theta,
               const TypeEnv& gamma, const Term& m) {
    const Type& ann = m.annotation();
    Split sp = split(ann, m.bound());
    KindEnv inner = delta.concat(sp.prefix);
    Step r1 = run(inner, theta, gamma, m.bound());
    UnifyResult u = unify(inner, r1.theta, sp.body, r1.type, supply_);
    Substitution theta2 = compose(u.subst, r1.subst);
    for (const auto& v : ftv(theta2)) {
      if (std::find(sp.prefix.begin(), sp.prefix.end(), v) != sp.prefix.end()) {
        throw Error(ErrorCode::AnnotationEscape,
                    "type variable " + v + " of the annotation " +
                        render_type(ann, false) + " escapes its scope",
                    m.span(), {ann});
      }
    }
    Step r2 = run(delta, u.theta_env,
                  apply(theta2, gamma).with(m.name(), ann), m.body());
    Derivation d = node(m, r2.type);
    if (record_) {
      d.binder_type = ann;
      d.generalised = true;
      d.prefix = sp.prefix;
      d.kids.push_back(sub(r2.subst, sub(u.subst, r1.deriv)));
      d.kids.push_back(std::move(r2.deriv));
    }
    return Step{std::move(r2.theta), compose(r2.subst, theta2),
                std::move(r2.type), std::move(d)};
  }

  NameSupply& supply_;
  bool record_;
};

void avoid_all(NameSupply& supply, const KindEnv& delta,
               const RefinedKindEnv& theta, const TypeEnv& gamma,
               const Term& m) {
  supply.avoid(delta);
  supply.avoid(theta);
  supply.avoid(gamma);
  std::vector<Type> anns;
  collect_annotations(m, anns);
  for (const Type& t : anns) supply.avoid(t);
}

}  // namespace

InferResult infer(const KindEnv& delta, const RefinedKindEnv& theta,
                  const TypeEnv& gamma, const Term& m, NameSupply& supply,
                  InferOptions opts) {
  avoid_all(supply, delta, theta, gamma, m);
  Engine engine(supply, opts.record_derivation);
  Step s = engine.run(delta, theta, gamma, m);
  InferResult r{std::move(s.theta), std::move(s.subst), std::move(s.type),
                std::nullopt};
  if (opts.record_derivation) r.derivation = std::move(s.deriv);
  return r;
}

InferResult infer_checked(const KindEnv& delta, const RefinedKindEnv& theta,
                          const TypeEnv& gamma, const Term& m,
                          NameSupply& supply, InferOptions opts) {
  for (const auto& n : delta) {
    if (theta.contains(n)) {
      throw Error(ErrorCode::Precondition,
                  "type variable " + n + " is both rigid and flexible");
    }
  }
  env_wf(delta, theta, gamma);
  wellscoped(delta, m);
  return infer(delta, theta, gamma, m, supply, opts);
}

Type infer_top(const TypeEnv& gamma, const Term& m) {
  Term core = desugar(m);
  NameSupply supply;
  return infer_checked(KindEnv{}, RefinedKindEnv{}, gamma, core, supply).type;
}

}  // namespace freezeml
