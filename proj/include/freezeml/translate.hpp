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

#ifndef FREEZEML_TRANSLATE_HPP
#define FREEZEML_TRANSLATE_HPP

#include "freezeml/env.hpp"
#include "freezeml/infer.hpp"
#include "freezeml/systemf.hpp"
#include "freezeml/term.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

// What to do with flexible variables left over at the root.
enum class Residuals {
  // Instantiate every residual at Int: a closed program.
  Ground,
  // Keep residuals as extra rigid variables appended to Δ, so the
  // elaborated type is the inferred type itself.
  Rigid,
};

struct Elaboration {
  Term term;          // the desugared term the derivation follows
  KindEnv delta;      // Δ, extended with the residuals in Rigid mode
  Derivation derivation;
  Type type;
};

// Infers M under Δ;Γ and returns the derivation with every substitution
// applied. Throws Error as infer does.
Elaboration rebuild_derivation(const KindEnv& delta, const TypeEnv& gamma,
                               const Term& m,
                               Residuals mode = Residuals::Ground);

// FreezeML derivation to System F. Throws Error(Internal) if the
// derivation is malformed.
FTerm to_systemf(const Derivation& d);

// System F term to FreezeML. t must typecheck under Δ;Γ. With naive set,
// type application omits the instantiating @, which is unsound.
Term from_systemf(const KindEnv& delta, const TypeEnv& gamma, const FTerm& t,
                  bool naive = false);

}  // namespace freezeml

#endif  // FREEZEML_TRANSLATE_HPP
