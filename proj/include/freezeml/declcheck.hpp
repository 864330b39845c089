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

#ifndef FREEZEML_DECLCHECK_HPP
#define FREEZEML_DECLCHECK_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freezeml/env.hpp"
#include "freezeml/infer.hpp"
#include "freezeml/subst.hpp"
#include "freezeml/term.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

// Simultaneous one-way matching: finds θ″ over `flex` with
// θ″(pattern) alpha_eq target for every pair. Images may not mention
// variables bound inside the target, and each image must have at most
// its variable's kind under (delta, image_theta). Variables no pair
// constrains map to themselves.
std::optional<Substitution> match_pairs(
    const KindEnv& delta, const RefinedKindEnv& image_theta,
    const RefinedKindEnv& flex,
    const std::vector<std::pair<Type, Type>>& pairs);

// θ″ over Θ_res with θ″(A_R) alpha_eq A₀, images checked under Δ.
std::optional<Substitution> match_instance(const KindEnv& delta,
                                           const RefinedKindEnv& theta_res,
                                           const Type& a_r, const Type& a0);

// Decides Δ;Γ ⊢ M : A₀ by principal inference plus instance matching.
// Throws Error(Precondition) when M is not well scoped under Δ, Γ is not
// well formed under Δ, or A₀ is not well kinded under Δ.
bool check_typing(const KindEnv& delta, const TypeEnv& gamma, const Term& m,
                  const Type& a0);

// Replays the typing rules over a recorded derivation, skipping only the
// principality side condition of the let rule. Returns an explanation of
// the first rule violation, or nullopt when every node checks.
std::optional<std::string> check_derivation(const KindEnv& delta,
                                            const TypeEnv& gamma,
                                            const Term& m,
                                            const Derivation& d);

}  // namespace freezeml

#endif  // FREEZEML_DECLCHECK_HPP
