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

#ifndef FREEZEML_CLI_HPP
#define FREEZEML_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace freezeml {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitTypeError = 1;
inline constexpr int kExitUsage = 2;

// Runs the tool on argv-style arguments (args[0] is the program name).
// Results go to out, diagnostics to err.
//
//   parse FILE             print the parsed term
//   infer FILE             print `TERM : TYPE`; --show-elab adds the F term
//   check FILE --type T    exit 0 iff T is a type of the term
//   elaborate FILE         print the System F term and its checked type
//   import FILE            read a System F term, print its FreezeML encoding
//   golden [--corpus F]    run the golden corpus
//
// Global flags: --no-prelude, --ascii (default), --unicode. FILE may be -
// for standard input.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace freezeml

#endif  // FREEZEML_CLI_HPP
