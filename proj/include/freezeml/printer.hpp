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

#ifndef FREEZEML_PRINTER_HPP
#define FREEZEML_PRINTER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "freezeml/term.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

enum class Charset { Ascii, Unicode };

struct RenderOptions {
  // Rename internal ('%') variables to a, b, c, ...: free ones first, in
  // first-occurrence order, then bound ones.
  bool normalize = true;
  Charset charset = Charset::Ascii;
};

std::string render_type(const Type& a, RenderOptions opts = {});
inline std::string render_type(const Type& a, bool normalize) {
  return render_type(a, RenderOptions{normalize, Charset::Ascii});
}

// Renders several types with one shared display renaming, so a variable
// shared between them prints the same everywhere.
std::vector<std::string> render_types(const std::vector<Type>& types,
                                      RenderOptions opts = {});

// Concrete syntax accepted by parse_term. Annotations are printed as is.
std::string render_term(const Term& m, Charset charset = Charset::Ascii);

// Short human-readable form of a single variable name for diagnostics.
std::string display_name(std::string_view name);

}  // namespace freezeml

#endif  // FREEZEML_PRINTER_HPP
