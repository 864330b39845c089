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

#ifndef FREEZEML_STATICS_HPP
#define FREEZEML_STATICS_HPP

#include <optional>

#include "freezeml/env.hpp"
#include "freezeml/term.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

// Minimal kind of A. Forall always yields ★ and binds its variable at •.
// Throws Error(UnboundTyVar).
Kind kind_of(const KindEnv& delta, const Type& a);
Kind kind_of(const RefinedKindEnv& theta, const Type& a);
// Δ,Θ ⊢ A, with Δ entries counted as •.
Kind kind_of(const KindEnv& delta, const RefinedKindEnv& theta, const Type& a);

// Non-throwing variants: nullopt when some variable is unbound.
std::optional<Kind> try_kind_of(const KindEnv& delta, const Type& a);
std::optional<Kind> try_kind_of(const KindEnv& delta,
                                const RefinedKindEnv& theta, const Type& a);

inline bool has_kind(const KindEnv& delta, const RefinedKindEnv& theta,
                     const Type& a, Kind k) {
  auto got = try_kind_of(delta, theta, a);
  return got && kind_leq(*got, k);
}

// Θ ⊢ Γ: every binding is well-kinded and its free variables are •.
// Throws Error(PolyVarInEnv) or Error(UnboundTyVar).
void env_wf(const RefinedKindEnv& theta, const TypeEnv& gamma);
void env_wf(const KindEnv& delta, const RefinedKindEnv& theta,
            const TypeEnv& gamma);

// Δ ⊢ M for a desugared term. Throws Error(UnboundTyVar) located at the
// offending annotation, or Error(ShadowedTyVar) when an annotation's
// generalised prefix rebinds a variable already in Δ.
void wellscoped(const KindEnv& delta, const Term& m);

}  // namespace freezeml

#endif  // FREEZEML_STATICS_HPP
