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

#ifndef FREEZEML_UNIFY_HPP
#define FREEZEML_UNIFY_HPP

#include "freezeml/env.hpp"
#include "freezeml/subst.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

struct UnifyResult {
  RefinedKindEnv theta_env;  // Θ′
  Substitution subst;        // θ : Θ ⇒ Θ′, total over Θ
};

// Most general unifier of A and B under rigid Δ and flexible Θ.
// Throws Error with one of ConMismatch, RigidMismatch, OccursOrKind,
// SkolemEscape or StructureMismatch. Skolems are drawn from supply and
// never appear in the result.
UnifyResult unify(const KindEnv& delta, const RefinedKindEnv& theta,
                  const Type& a, const Type& b, NameSupply& supply);

// Convenience overload with a supply that avoids every name in play.
UnifyResult unify(const KindEnv& delta, const RefinedKindEnv& theta,
                  const Type& a, const Type& b);

}  // namespace freezeml

#endif  // FREEZEML_UNIFY_HPP
