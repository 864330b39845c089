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

#include "freezeml/diagnostics.hpp"

#include <utility>

namespace freezeml {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::Arity: return "ArityError";
    case ErrorCode::MissingFinalTerm: return "MissingFinalTerm";
    case ErrorCode::UnboundTyVar: return "UnboundTyVar";
    case ErrorCode::ShadowedTyVar: return "ShadowedTyVar";
    case ErrorCode::PolyVarInEnv: return "PolyVarInEnv";
    case ErrorCode::ConMismatch: return "ConMismatch";
    case ErrorCode::RigidMismatch: return "RigidMismatch";
    case ErrorCode::OccursOrKind: return "OccursOrKind";
    case ErrorCode::SkolemEscape: return "SkolemEscape";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::UnboundVar: return "UnboundVar";
    case ErrorCode::AnnotationEscape: return "AnnotationEscape";
    case ErrorCode::NotAFunction: return "NotAFunction";
    case ErrorCode::NotAForall: return "NotAForall";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::ValueRestriction: return "ValueRestriction";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Internal: return "InternalError";
  }
  return "Error";
}

bool is_syntax_error(ErrorCode code) {
  return code == ErrorCode::Syntax || code == ErrorCode::Arity ||
         code == ErrorCode::MissingFinalTerm;
}

Error::Error(ErrorCode code, const std::string& message, SourceSpan span,
             std::vector<Type> types)
    : std::runtime_error(message),
      code_(code),
      span_(span),
      types_(std::move(types)) {}

std::string format_diagnostic(std::string_view file, const Error& e) {
  std::string out(file);
  if (e.span().valid()) {
    out += ":" + std::to_string(e.span().line) + ":" +
           std::to_string(e.span().column);
  }
  out += ": error: ";
  out += e.what();
  return out;
}

}  // namespace freezeml
