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

#ifndef FREEZEML_PRELUDE_HPP
#define FREEZEML_PRELUDE_HPP

#include <string>
#include <utility>
#include <vector>

#include "freezeml/env.hpp"

namespace freezeml {

// (name, signature text) in the order the signatures are listed, followed by
// the builtins True, False and +.
const std::vector<std::pair<std::string, std::string>>& prelude_signatures();

// The standard Γ: every signature above entered as an axiom.
const TypeEnv& prelude();

// The part of the prelude whose types are ML type schemes (rank-1, no
// quantifier under a constructor). Drops ids, poly, auto, auto', runST and
// argST.
const TypeEnv& ml_prelude();

}  // namespace freezeml

#endif  // FREEZEML_PRELUDE_HPP
