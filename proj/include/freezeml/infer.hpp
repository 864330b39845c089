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

#ifndef FREEZEML_INFER_HPP
#define FREEZEML_INFER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freezeml/env.hpp"
#include "freezeml/subst.hpp"
#include "freezeml/term.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

// (Δ″, Δ‴): the variables a let abstracts over and those it leaves to be
// instantiated monomorphically.
struct GenResult {
  std::vector<std::string> generalised;
  std::vector<std::string> all;
};
// Δ‴ = ftv(A) − Δ; generalised = Δ‴ if M is a guarded value, else empty.
GenResult gen(const KindEnv& delta, const Type& a, const Term& m);

struct Split {
  std::vector<std::string> prefix;
  Type body;
};
// For A = ∀Δ.H: (Δ, H) if M is a guarded value, else (·, A).
Split split(const Type& a, const Term& m);

// Typing derivation recorded by the inference algorithm. Types are fully
// resolved: the final substitution has been applied throughout.
struct Derivation {
  Term::Tag rule = Term::Tag::Var;
  std::string name;  // variable, or the bound variable of Lam/Let
  std::int64_t value = 0;
  Type type = int_type();

  // Lam, LamAnn: parameter type. Let, LetAnn: type given to the bound
  // variable in the body.
  std::optional<Type> binder_type;

  // Var: positional instantiation of the peeled quantifier prefix.
  std::vector<Type> args;

  // Let, LetAnn: rigid variables in scope for the bound term's derivation.
  // A generalised let abstracts over them; otherwise inst maps each to the
  // monotype it is instantiated with.
  std::vector<std::string> prefix;
  bool generalised = false;
  Instantiation inst;

  std::vector<Derivation> kids;  // Lam: body; App: fn, arg; Let: bound, body
};

Derivation apply(const TypeMap& m, const Derivation& d);

struct InferResult {
  RefinedKindEnv theta_env;  // Θ′
  Substitution subst;        // θ : Θ ⇒ Θ′
  Type type = int_type();
  std::optional<Derivation> derivation;
};

struct InferOptions {
  bool record_derivation = false;
};

// Algorithm W extended with freezing, annotations and kinds. M must be
// desugared. Preconditions (env_wf, wellscoped) are the caller's job; see
// infer_checked. Throws Error on failure.
InferResult infer(const KindEnv& delta, const RefinedKindEnv& theta,
                  const TypeEnv& gamma, const Term& m, NameSupply& supply,
                  InferOptions opts = {});

// Checks the preconditions first, then infers.
InferResult infer_checked(const KindEnv& delta, const RefinedKindEnv& theta,
                          const TypeEnv& gamma, const Term& m,
                          NameSupply& supply, InferOptions opts = {});

// Desugars, checks scope, infers under Δ = Θ = · with a fresh supply.
// The returned type still uses internal names; render with normalization.
Type infer_top(const TypeEnv& gamma, const Term& m);

}  // namespace freezeml

#endif  // FREEZEML_INFER_HPP
