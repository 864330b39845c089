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

#ifndef FREEZEML_DIAGNOSTICS_HPP
#define FREEZEML_DIAGNOSTICS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "freezeml/type.hpp"

namespace freezeml {

// Byte range [begin, end) in the source plus the 1-based line/column of
// begin. line == 0 means "no location".
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 0;
  int column = 0;

  bool valid() const { return line > 0; }
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ErrorCode {
  // parser
  Syntax,
  Arity,
  MissingFinalTerm,
  // statics
  UnboundTyVar,
  ShadowedTyVar,
  PolyVarInEnv,
  // unification
  ConMismatch,
  RigidMismatch,
  OccursOrKind,
  SkolemEscape,
  StructureMismatch,
  // inference
  UnboundVar,
  AnnotationEscape,
  // System F
  NotAFunction,
  NotAForall,
  TypeMismatch,
  ValueRestriction,
  // misc
  Precondition,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Parse-level failures map to CLI exit code 2, everything else to 1.
bool is_syntax_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, SourceSpan span = {},
        std::vector<Type> types = {});

  ErrorCode code() const { return code_; }
  const SourceSpan& span() const { return span_; }
  // Types at fault, e.g. the pair that failed to unify.
  const std::vector<Type>& types() const { return types_; }

  // Attaches a location unless one is already present.
  void locate(const SourceSpan& span) {
    if (!span_.valid()) span_ = span;
  }

 private:
  ErrorCode code_;
  SourceSpan span_;
  std::vector<Type> types_;
};

// "file:line:col: error: message"
std::string format_diagnostic(std::string_view file, const Error& e);

}  // namespace freezeml

#endif  // FREEZEML_DIAGNOSTICS_HPP
