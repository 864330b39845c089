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

#include "freezeml/term.hpp"

#include <utility>

namespace freezeml {

struct Term::Node {
  Tag tag;
  std::string name;
  std::optional<Type> ann;
  std::int64_t value = 0;
  SourceSpan span;
  std::vector<Term> kids;
};

namespace {

template <class... Kids>
std::vector<Term> kids_of(Kids&&... kids) {
  std::vector<Term> v;
  v.reserve(sizeof...(kids));
  (v.push_back(std::forward<Kids>(kids)), ...);
  return v;
}

}  // namespace

Term Term::var(std::string x, SourceSpan span) {
  return Term(std::make_shared<const Node>(
      Node{Tag::Var, std::move(x), std::nullopt, 0, span, {}}));
}

Term Term::freeze(std::string x, SourceSpan span) {
  return Term(std::make_shared<const Node>(
      Node{Tag::Freeze, std::move(x), std::nullopt, 0, span, {}}));
}

Term Term::lam(std::string x, Term body, SourceSpan span) {
  return Term(std::make_shared<const Node>(Node{
      Tag::Lam, std::move(x), std::nullopt, 0, span, kids_of(std::move(body))}));
}

Term Term::lam_ann(std::string x, Type ann, Term body, SourceSpan span) {
  return Term(std::make_shared<const Node>(Node{Tag::LamAnn, std::move(x),
                                                std::move(ann), 0, span,
                                                kids_of(std::move(body))}));
}

Term Term::app(Term fn, Term arg, SourceSpan span) {
  return Term(std::make_shared<const Node>(
      Node{Tag::App, {}, std::nullopt, 0, span,
           kids_of(std::move(fn), std::move(arg))}));
}

Term Term::let(std::string x, Term bound, Term body, SourceSpan span) {
  return Term(std::make_shared<const Node>(
      Node{Tag::Let, std::move(x), std::nullopt, 0, span,
           kids_of(std::move(bound), std::move(body))}));
}

Term Term::let_ann(std::string x, Type ann, Term bound, Term body,
                   SourceSpan span) {
  return Term(std::make_shared<const Node>(
      Node{Tag::LetAnn, std::move(x), std::move(ann), 0, span,
           kids_of(std::move(bound), std::move(body))}));
}

Term Term::int_lit(std::int64_t value, SourceSpan span) {
  return Term(std::make_shared<const Node>(
      Node{Tag::IntLit, {}, std::nullopt, value, span, {}}));
}

Term Term::gen(Term inner, SourceSpan span) {
  return Term(std::make_shared<const Node>(
      Node{Tag::Gen, {}, std::nullopt, 0, span, kids_of(std::move(inner))}));
}

Term Term::inst(Term inner, SourceSpan span) {
  return Term(std::make_shared<const Node>(
      Node{Tag::Inst, {}, std::nullopt, 0, span, kids_of(std::move(inner))}));
}

Term::Tag Term::tag() const { return node_->tag; }
const std::string& Term::name() const { return node_->name; }
const Type& Term::annotation() const { return *node_->ann; }
std::int64_t Term::int_value() const { return node_->value; }
const SourceSpan& Term::span() const { return node_->span; }

const Term& Term::body() const { return node_->kids.back(); }
const Term& Term::bound() const { return node_->kids.front(); }
const Term& Term::fn() const { return node_->kids[0]; }
const Term& Term::arg() const { return node_->kids[1]; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.tag != y.tag || x.name != y.name || x.value != y.value ||
      x.ann.has_value() != y.ann.has_value()) {
    return false;
  }
  if (x.ann && !(*x.ann == *y.ann)) return false;
  if (x.kids.size() != y.kids.size()) return false;
  for (std::size_t i = 0; i < x.kids.size(); ++i) {
    if (!(x.kids[i] == y.kids[i])) return false;
  }
  return true;
}

ValueClass classify(const Term& m) {
  using T = Term::Tag;
  switch (m.tag()) {
    case T::Var:
    case T::Lam:
    case T::LamAnn:
    case T::IntLit:
      return ValueClass::GVal;
    case T::Freeze:
      return ValueClass::Val;
    case T::Let:
    case T::LetAnn: {
      if (classify(m.bound()) == ValueClass::NonVal) return ValueClass::NonVal;
      return classify(m.body());
    }
    case T::App:
    case T::Gen:
    case T::Inst:
      return ValueClass::NonVal;
  }
  return ValueClass::NonVal;
}

namespace {

class Desugarer {
 public:
  Term run(const Term& m) {
    using T = Term::Tag;
    switch (m.tag()) {
      case T::Var:
      case T::Freeze:
      case T::IntLit:
        return m;
      case T::Lam:
        return Term::lam(m.name(), run(m.body()), m.span());
      case T::LamAnn:
        return Term::lam_ann(m.name(), m.annotation(), run(m.body()), m.span());
      case T::App:
        return Term::app(run(m.fn()), run(m.arg()), m.span());
      case T::Let:
        return Term::let(m.name(), run(m.bound()), run(m.body()), m.span());
      case T::LetAnn:
        return Term::let_ann(m.name(), m.annotation(), run(m.bound()),
                             run(m.body()), m.span());
      case T::Gen: {
        std::string x = fresh();
        return Term::let(x, run(m.body()), Term::freeze(x, m.span()),
                         m.span());
      }
      case T::Inst: {
        std::string x = fresh();
        return Term::let(x, run(m.body()), Term::var(x, m.span()), m.span());
      }
    }
    return m;
  }

 private:
  std::string fresh() { return "%g" + std::to_string(next_++); }
  int next_ = 0;
};

}  // namespace

Term desugar(const Term& m) { return Desugarer{}.run(m); }

bool has_sugar(const Term& m) {
  using T = Term::Tag;
  switch (m.tag()) {
    case T::Var:
    case T::Freeze:
    case T::IntLit:
      return false;
    case T::Gen:
    case T::Inst:
      return true;
    case T::Lam:
    case T::LamAnn:
      return has_sugar(m.body());
    case T::App:
      return has_sugar(m.fn()) || has_sugar(m.arg());
    case T::Let:
    case T::LetAnn:
      return has_sugar(m.bound()) || has_sugar(m.body());
  }
  return false;
}

void collect_annotations(const Term& m, std::vector<Type>& out) {
  using T = Term::Tag;
  switch (m.tag()) {
    case T::Var:
    case T::Freeze:
    case T::IntLit:
      return;
    case T::LamAnn:
      out.push_back(m.annotation());
      [[fallthrough]];
    case T::Lam:
    case T::Gen:
    case T::Inst:
      collect_annotations(m.body(), out);
      return;
    case T::App:
      collect_annotations(m.fn(), out);
      collect_annotations(m.arg(), out);
      return;
    case T::LetAnn:
      out.push_back(m.annotation());
      [[fallthrough]];
    case T::Let:
      collect_annotations(m.bound(), out);
      collect_annotations(m.body(), out);
      return;
  }
}

}  // namespace freezeml
