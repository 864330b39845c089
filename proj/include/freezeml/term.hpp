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

#ifndef FREEZEML_TERM_HPP
#define FREEZEML_TERM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freezeml/diagnostics.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

// FreezeML term, including the two surface operators Gen ($M) and Inst (M@)
// which desugar() removes.
class Term {
 public:
  enum class Tag {
    Var,
    Freeze,
    Lam,
    LamAnn,
    App,
    Let,
    LetAnn,
    IntLit,
    Gen,
    Inst,
  };

  static Term var(std::string x, SourceSpan span = {});
  static Term freeze(std::string x, SourceSpan span = {});
  static Term lam(std::string x, Term body, SourceSpan span = {});
  static Term lam_ann(std::string x, Type ann, Term body, SourceSpan span = {});
  static Term app(Term fn, Term arg, SourceSpan span = {});
  static Term let(std::string x, Term bound, Term body, SourceSpan span = {});
  static Term let_ann(std::string x, Type ann, Term bound, Term body,
                      SourceSpan span = {});
  static Term int_lit(std::int64_t value, SourceSpan span = {});
  static Term gen(Term inner, SourceSpan span = {});
  static Term inst(Term inner, SourceSpan span = {});

  Tag tag() const;
  bool is(Tag t) const { return tag() == t; }
  // Bound or referenced term variable.
  const std::string& name() const;
  // Annotation of LamAnn / LetAnn.
  const Type& annotation() const;
  std::int64_t int_value() const;
  const SourceSpan& span() const;

  // Lam/LamAnn body; Let/LetAnn body; Gen/Inst operand.
  const Term& body() const;
  // Let/LetAnn bound term.
  const Term& bound() const;
  const Term& fn() const;
  const Term& arg() const;

  const void* identity() const { return node_.get(); }

  // Structural equality ignoring spans; annotations compared syntactically.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class ValueClass { NonVal, Val, GVal };

// Classifies a desugared term. GVal implies Val.
ValueClass classify(const Term& m);
inline bool is_value(const Term& m) { return classify(m) != ValueClass::NonVal; }
inline bool is_guarded_value(const Term& m) {
  return classify(m) == ValueClass::GVal;
}

// Removes Gen and Inst:
//   $M  => let %gN = M in ~%gN
//   M@  => let %gN = M in %gN
// The fresh names use the reserved '%' prefix so they cannot capture.
Term desugar(const Term& m);

// True if the term still contains Gen or Inst nodes.
bool has_sugar(const Term& m);

// Every type annotation in the term, in pre-order.
void collect_annotations(const Term& m, std::vector<Type>& out);

}  // namespace freezeml

#endif  // FREEZEML_TERM_HPP
