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

#include "freezeml/statics.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "freezeml/diagnostics.hpp"
#include "freezeml/infer.hpp"
#include "freezeml/printer.hpp"

namespace freezeml {

namespace {

// Kinds every free variable through lookup; nullopt on an unbound one,
// whose name is reported through *unbound.
template <class Lookup>
std::optional<Kind> kind_walk(const Type& t, std::vector<std::string>& bound,
                              const Lookup& lookup, std::string* unbound) {
  switch (t.tag()) {
    case Type::Tag::Var: {
      if (std::find(bound.begin(), bound.end(), t.name()) != bound.end()) {
        return Kind::Mono;
      }
      std::optional<Kind> k = lookup(t.name());
      if (!k && unbound) *unbound = t.name();
      return k;
    }
    case Type::Tag::Forall: {
      bound.push_back(t.name());
      auto k = kind_walk(t.body(), bound, lookup, unbound);
      bound.pop_back();
      if (!k) return std::nullopt;
      return Kind::Poly;
    }
    case Type::Tag::Con: {
      Kind acc = Kind::Mono;
      for (const Type& a : t.args()) {
        auto k = kind_walk(a, bound, lookup, unbound);
        if (!k) return std::nullopt;
        acc = join(acc, *k);
      }
      return acc;
    }
  }
  return std::nullopt;
}

template <class Lookup>
std::optional<Kind> try_kind(const Type& t, const Lookup& lookup,
                             std::string* unbound = nullptr) {
  std::vector<std::string> bound;
  return kind_walk(t, bound, lookup, unbound);
}

template <class Lookup>
Kind kind_or_throw(const Type& t, const Lookup& lookup) {
  std::string unbound;
  auto k = try_kind(t, lookup, &unbound);
  if (!k) {
    throw Error(ErrorCode::UnboundTyVar,
                "unbound type variable " + display_name(unbound), {}, {t});
  }
  return *k;
}

auto delta_lookup(const KindEnv& delta) {
  return [&delta](const std::string& n) -> std::optional<Kind> {
    if (delta.contains(n)) return Kind::Mono;
    return std::nullopt;
  };
}

auto both_lookup(const KindEnv& delta, const RefinedKindEnv& theta) {
  return [&delta, &theta](const std::string& n) -> std::optional<Kind> {
    if (delta.contains(n)) return Kind::Mono;
    return theta.find(n);
  };
}

}  // namespace

Kind kind_of(const KindEnv& delta, const Type& a) {
  return kind_or_throw(a, delta_lookup(delta));
}

Kind kind_of(const RefinedKindEnv& theta, const Type& a) {
  return kind_or_throw(
      a, [&theta](const std::string& n) { return theta.find(n); });
}

Kind kind_of(const KindEnv& delta, const RefinedKindEnv& theta,
             const Type& a) {
  return kind_or_throw(a, both_lookup(delta, theta));
}

std::optional<Kind> try_kind_of(const KindEnv& delta, const Type& a) {
  return try_kind(a, delta_lookup(delta));
}

std::optional<Kind> try_kind_of(const KindEnv& delta,
                                const RefinedKindEnv& theta, const Type& a) {
  return try_kind(a, both_lookup(delta, theta));
}

void env_wf(const KindEnv& delta, const RefinedKindEnv& theta,
            const TypeEnv& gamma) {
  for (const auto& [x, t] : gamma) {
    kind_of(delta, theta, t);
    for (const auto& v : ftv_ordered(t)) {
      if (delta.contains(v)) continue;
      if (theta.find(v) == Kind::Poly) {
        throw Error(ErrorCode::PolyVarInEnv,
                    "variable " + x + " mentions polymorphic type variable " +
                        display_name(v),
                    {}, {t});
      }
    }
  }
}

void env_wf(const RefinedKindEnv& theta, const TypeEnv& gamma) {
  env_wf(KindEnv{}, theta, gamma);
}

namespace {

void check_annotation(const KindEnv& delta, const Term& m) {
  try {
    kind_of(delta, m.annotation());
  } catch (Error& e) {
    e.locate(m.span());
    throw;
  }
}

}  // namespace

void wellscoped(const KindEnv& delta, const Term& m) {
  using T = Term::Tag;
  switch (m.tag()) {
    case T::Var:
    case T::Freeze:
    case T::IntLit:
      return;
    case T::Lam:
      wellscoped(delta, m.body());
      return;
    case T::LamAnn:
      check_annotation(delta, m);
      wellscoped(delta, m.body());
      return;
    case T::App:
      wellscoped(delta, m.fn());
      wellscoped(delta, m.arg());
      return;
    case T::Let:
      wellscoped(delta, m.bound());
      wellscoped(delta, m.body());
      return;
    case T::LetAnn: {
      check_annotation(delta, m);
      Split s = split(m.annotation(), m.bound());
      KindEnv inner;
      try {
        inner = delta.concat(s.prefix);
      } catch (Error& e) {
        e.locate(m.span());
        throw;
      }
      wellscoped(inner, m.bound());
      wellscoped(delta, m.body());
      return;
    }
    case T::Gen:
    case T::Inst:
      throw Error(ErrorCode::Precondition,
                  "scope check expects a desugared term", m.span());
  }
}

}  // namespace freezeml
