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

#include "freezeml/unify.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "freezeml/diagnostics.hpp"
#include "freezeml/printer.hpp"
#include "freezeml/statics.hpp"

namespace freezeml {

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& what, const Type& a,
                       const Type& b) {
  auto shown = render_types({a, b});
  throw Error(code,
              what + ": cannot unify " + shown[0] + " with " + shown[1], {},
              {a, b});
}

// Solves the flexible variable v against t. Θ keeps its order; v's slot
// in the substitution carries t.
UnifyResult bind(const KindEnv& delta, const RefinedKindEnv& theta,
                 const std::string& v, Kind k, const Type& t,
                 const Type& lhs, const Type& rhs) {
  RefinedKindEnv rest = theta.without(v);
  std::vector<std::string> vars;
  for (const auto& n : ftv_ordered(t)) {
    if (!delta.contains(n)) vars.push_back(n);
  }
  RefinedKindEnv theta1 = demote(k, rest, vars);
  if (!has_kind(delta, theta1, t, k)) {
    fail(ErrorCode::OccursOrKind,
         occurs_free(v, t) ? "occurs check failed"
                           : "kind mismatch (polymorphic type at a "
                             "monomorphic variable)",
         lhs, rhs);
  }
  Substitution s;
  for (const auto& [n, kind] : theta) {
    s.set(n, n == v ? t : Type::var(n));
  }
  return {std::move(theta1), std::move(s)};
}

UnifyResult go(const KindEnv& delta, const RefinedKindEnv& theta,
               const Type& a, const Type& b, NameSupply& supply) {
  if (a.is_var() && b.is_var() && a.name() == b.name()) {
    return {theta, identity_subst(theta)};
  }
  if (a.is_var()) {
    if (auto k = theta.find(a.name())) {
      return bind(delta, theta, a.name(), *k, b, a, b);
    }
  }
  if (b.is_var()) {
    if (auto k = theta.find(b.name())) {
      return bind(delta, theta, b.name(), *k, a, a, b);
    }
  }
  if (a.is_con() && b.is_con()) {
    if (a.con() != b.con()) {
      fail(ErrorCode::ConMismatch, "constructor mismatch", a, b);
    }
    RefinedKindEnv cur = theta;
    Substitution acc = identity_subst(theta);
    for (std::size_t i = 0; i < a.args().size(); ++i) {
      UnifyResult r = go(delta, cur, apply(acc, a.arg(i)),
                         apply(acc, b.arg(i)), supply);
      acc = compose(r.subst, acc);
      cur = std::move(r.theta_env);
    }
    return {std::move(cur), std::move(acc)};
  }
  if (a.is_forall() && b.is_forall()) {
    std::string c = supply.fresh();
    Type sk = Type::var(c);
    Type body_a = apply(TypeMap{{a.name(), sk}}, a.body());
    Type body_b = apply(TypeMap{{b.name(), sk}}, b.body());
    KindEnv inner = delta;
    inner.push(c);
    UnifyResult r = go(inner, theta, body_a, body_b, supply);
    auto escaped = ftv(r.subst);
    if (std::find(escaped.begin(), escaped.end(), c) != escaped.end()) {
      fail(ErrorCode::SkolemEscape, "quantified variable would escape its scope",
           a, b);
    }
    return r;
  }
  if (a.is_var() || b.is_var()) {
    fail(ErrorCode::RigidMismatch, "rigid type variable mismatch", a, b);
  }
  fail(ErrorCode::StructureMismatch, "quantifier structure mismatch", a, b);
}

}  // namespace

UnifyResult unify(const KindEnv& delta, const RefinedKindEnv& theta,
                  const Type& a, const Type& b, NameSupply& supply) {
  supply.avoid(delta);
  supply.avoid(theta);
  supply.avoid(a);
  supply.avoid(b);
  return go(delta, theta, a, b, supply);
}

UnifyResult unify(const KindEnv& delta, const RefinedKindEnv& theta,
                  const Type& a, const Type& b) {
  NameSupply supply;
  return unify(delta, theta, a, b, supply);
}

}  // namespace freezeml
