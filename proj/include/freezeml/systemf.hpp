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

#ifndef FREEZEML_SYSTEMF_HPP
#define FREEZEML_SYSTEMF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freezeml/env.hpp"
#include "freezeml/printer.hpp"
#include "freezeml/subst.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

// Explicitly typed call-by-value System F.
class FTerm {
 public:
  enum class Tag { Var, Lam, App, TyAbs, TyApp, IntLit };

  static FTerm var(std::string x);
  static FTerm lam(std::string x, Type param, FTerm body);
  static FTerm app(FTerm fn, FTerm arg);
  static FTerm ty_abs(std::string a, FTerm body);
  static FTerm ty_app(FTerm fn, Type arg);
  static FTerm int_lit(std::int64_t value);

  Tag tag() const;
  bool is(Tag t) const { return tag() == t; }
  // Var name, Lam parameter, or TyAbs type variable.
  const std::string& name() const;
  // Lam parameter type or TyApp argument.
  const Type& type() const;
  std::int64_t int_value() const;
  // Lam/TyAbs body.
  const FTerm& body() const;
  const FTerm& fn() const;
  const FTerm& arg() const;

  friend bool operator==(const FTerm& a, const FTerm& b);

 private:
  struct Node;
  explicit FTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// let x^A = M in N, encoded as (λx^A.N) M.
FTerm f_let(std::string x, Type a, FTerm bound, FTerm body);
// Λa1. ... Λan. body
FTerm f_ty_abs(std::span<const std::string> vars, FTerm body);
// M A1 ... An, left-nested.
FTerm f_ty_app(FTerm fn, std::span<const Type> args);

// Values: x, I A for a value instantiation I, λ, Λ, integer literals, and
// the let form (λx^A.W) V with values V and W. The let form is needed
// because let-bound values are values in FreezeML.
bool is_f_value(const FTerm& t);

// Δ;Γ ⊢ t : A. Throws Error with UnboundVar, UnboundTyVar, NotAFunction,
// NotAForall, TypeMismatch, ValueRestriction or ShadowedTyVar (a Λ that
// rebinds a type variable already in scope).
Type f_typecheck(const KindEnv& delta, const TypeEnv& gamma, const FTerm& t);

// Applies a rigid instantiation to every type annotation in t.
FTerm apply(const TypeMap& m, const FTerm& t);

// Appends every type variable name in t, bound or free, to out.
void collect_type_names(const FTerm& t, std::vector<std::string>& out);

// Concrete syntax: /\a. t, \x:T. t, t [T], left-nested application.
// Internal names are renamed for display.
std::string render_fterm(const FTerm& t, Charset charset = Charset::Ascii);

// Parses the syntax render_fterm produces (with user-level names).
// Λ and λ may also be written with the Unicode letters.
FTerm parse_fterm(std::string_view text);

}  // namespace freezeml

#endif  // FREEZEML_SYSTEMF_HPP
