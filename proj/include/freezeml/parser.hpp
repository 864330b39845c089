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

#ifndef FREEZEML_PARSER_HPP
#define FREEZEML_PARSER_HPP

#include <string_view>

#include "freezeml/term.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

// All three throw Error(Syntax) or Error(Arity) carrying the source span.
// ASCII and Unicode spellings are both accepted: forall/∀, ->/→, \/λ.

Type parse_type(std::string_view text);

// Surface term; may still contain $ and @ (see desugar).
//   [a, b]   => a :: b :: []
//   (a, b)   => pair a b
//   x :: y, x ++ y, x + y, and the sections (::), (++), (+)
// name the prelude functions ::, ++ and +.
Term parse_term(std::string_view text);

// `name (: type)? = term ;` declarations followed by a final term. Throws
// Error(MissingFinalTerm) when only declarations are present.
Term parse_program(std::string_view text);

}  // namespace freezeml

#endif  // FREEZEML_PARSER_HPP
