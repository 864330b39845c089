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

#include "freezeml/systemf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <utility>

#include "freezeml/diagnostics.hpp"
#include "freezeml/statics.hpp"
#include "lexer.hpp"

namespace freezeml {

struct FTerm::Node {
  Tag tag;
  std::string name;
  std::optional<Type> type;
  std::int64_t value = 0;
  std::vector<FTerm> kids;
};

FTerm FTerm::var(std::string x) {
  return FTerm(std::make_shared<const Node>(
      Node{Tag::Var, std::move(x), std::nullopt, 0, {}}));
}

FTerm FTerm::lam(std::string x, Type param, FTerm body) {
  return FTerm(std::make_shared<const Node>(
      Node{Tag::Lam, std::move(x), std::move(param), 0, {std::move(body)}}));
}

FTerm FTerm::app(FTerm fn, FTerm arg) {
  return FTerm(std::make_shared<const Node>(
      Node{Tag::App, {}, std::nullopt, 0, {std::move(fn), std::move(arg)}}));
}

FTerm FTerm::ty_abs(std::string a, FTerm body) {
  return FTerm(std::make_shared<const Node>(
      Node{Tag::TyAbs, std::move(a), std::nullopt, 0, {std::move(body)}}));
}

FTerm FTerm::ty_app(FTerm fn, Type arg) {
  return FTerm(std::make_shared<const Node>(
      Node{Tag::TyApp, {}, std::move(arg), 0, {std::move(fn)}}));
}

FTerm FTerm::int_lit(std::int64_t value) {
  return FTerm(std::make_shared<const Node>(
      Node{Tag::IntLit, {}, std::nullopt, value, {}}));
}

FTerm::Tag FTerm::tag() const { return node_->tag; }
const std::string& FTerm::name() const { return node_->name; }
const Type& FTerm::type() const { return *node_->type; }
std::int64_t FTerm::int_value() const { return node_->value; }
const FTerm& FTerm::body() const { return node_->kids.back(); }
const FTerm& FTerm::fn() const { return node_->kids.front(); }
const FTerm& FTerm::arg() const { return node_->kids[1]; }

bool operator==(const FTerm& a, const FTerm& b) {
  if (a.node_ == b.node_) return true;
  const FTerm::Node& x = *a.node_;
  const FTerm::Node& y = *b.node_;
  if (x.tag != y.tag || x.name != y.name || x.value != y.value ||
      x.type.has_value() != y.type.has_value() ||
      x.kids.size() != y.kids.size()) {
    return false;
  }
  if (x.type && !(*x.type == *y.type)) return false;
  for (std::size_t i = 0; i < x.kids.size(); ++i) {
    if (!(x.kids[i] == y.kids[i])) return false;
  }
  return true;
}

FTerm f_let(std::string x, Type a, FTerm bound, FTerm body) {
  return FTerm::app(FTerm::lam(std::move(x), std::move(a), std::move(body)),
                    std::move(bound));
}

FTerm f_ty_abs(std::span<const std::string> vars, FTerm body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    body = FTerm::ty_abs(*it, std::move(body));
  }
  return body;
}

FTerm f_ty_app(FTerm fn, std::span<const Type> args) {
  for (const Type& a : args) fn = FTerm::ty_app(std::move(fn), a);
  return fn;
}

namespace {

bool is_instantiation(const FTerm& t) {
  if (t.is(FTerm::Tag::Var)) return true;
  return t.is(FTerm::Tag::TyApp) && is_instantiation(t.fn());
}

}  // namespace

bool is_f_value(const FTerm& t) {
  switch (t.tag()) {
    case FTerm::Tag::Var:
    case FTerm::Tag::Lam:
    case FTerm::Tag::TyAbs:
    case FTerm::Tag::IntLit:
      return true;
    case FTerm::Tag::TyApp:
      return is_instantiation(t);
    case FTerm::Tag::App:
      return t.fn().is(FTerm::Tag::Lam) && is_f_value(t.fn().body()) &&
             is_f_value(t.arg());
  }
  return false;
}

namespace {

class FChecker {
 public:
  Type check(const KindEnv& delta, const TypeEnv& gamma, const FTerm& t) {
    switch (t.tag()) {
      case FTerm::Tag::Var: {
        const Type* a = gamma.lookup(t.name());
        if (!a) {
          throw Error(ErrorCode::UnboundVar, "unbound variable " + t.name());
        }
        return *a;
      }
      case FTerm::Tag::IntLit:
        return int_type();
      case FTerm::Tag::Lam: {
        kind_of(delta, t.type());
        Type b = check(delta, gamma.with(t.name(), t.type()), t.body());
        return arrow(t.type(), std::move(b));
      }
      case FTerm::Tag::App: {
        Type f = check(delta, gamma, t.fn());
        Type a = check(delta, gamma, t.arg());
        if (!f.is_con(cons::Arrow)) {
          throw Error(ErrorCode::NotAFunction,
                      "applying a term of non-function type " +
                          render_type(f, false),
                      {}, {f});
        }
        if (!alpha_eq(f.arg(0), a)) {
          auto shown = render_types({f.arg(0), a}, {false, Charset::Ascii});
          throw Error(ErrorCode::TypeMismatch,
                      "argument type mismatch: expected " + shown[0] +
                          ", got " + shown[1],
                      {}, {f.arg(0), a});
        }
        return f.arg(1);
      }
      case FTerm::Tag::TyAbs: {
        if (!is_f_value(t.body())) {
          throw Error(ErrorCode::ValueRestriction,
                      "body of type abstraction over " + t.name() +
                          " is not a value");
        }
        if (delta.contains(t.name())) {
          throw Error(ErrorCode::ShadowedTyVar,
                      "type abstraction rebinds " + t.name());
        }
        KindEnv inner = delta;
        inner.push(t.name());
        Type b = check(inner, gamma, t.body());
        return Type::forall(t.name(), std::move(b));
      }
      case FTerm::Tag::TyApp: {
        Type f = check(delta, gamma, t.fn());
        if (!f.is_forall()) {
          throw Error(ErrorCode::NotAForall,
                      "type application to non-polymorphic type " +
                          render_type(f, false),
                      {}, {f});
        }
        kind_of(delta, t.type());
        return apply(TypeMap{{f.name(), t.type()}}, f.body());
      }
    }
    throw Error(ErrorCode::Internal, "unknown System F term");
  }
};

}  // namespace

Type f_typecheck(const KindEnv& delta, const TypeEnv& gamma, const FTerm& t) {
  return FChecker{}.check(delta, gamma, t);
}

FTerm apply(const TypeMap& m, const FTerm& t) {
  switch (t.tag()) {
    case FTerm::Tag::Var:
    case FTerm::Tag::IntLit:
      return t;
    case FTerm::Tag::Lam:
      return FTerm::lam(t.name(), apply(m, t.type()), apply(m, t.body()));
    case FTerm::Tag::App:
      return FTerm::app(apply(m, t.fn()), apply(m, t.arg()));
    case FTerm::Tag::TyAbs:
      return FTerm::ty_abs(t.name(), apply(m.without(t.name()), t.body()));
    case FTerm::Tag::TyApp:
      return FTerm::ty_app(apply(m, t.fn()), apply(m, t.type()));
  }
  return t;
}

namespace {

void collect_fnames(const FTerm& t, std::vector<std::string>& types,
                    std::vector<std::string>& terms) {
  switch (t.tag()) {
    case FTerm::Tag::Var:
      terms.push_back(t.name());
      return;
    case FTerm::Tag::IntLit:
      return;
    case FTerm::Tag::Lam:
      terms.push_back(t.name());
      collect_names(t.type(), types);
      collect_fnames(t.body(), types, terms);
      return;
    case FTerm::Tag::App:
      collect_fnames(t.fn(), types, terms);
      collect_fnames(t.arg(), types, terms);
      return;
    case FTerm::Tag::TyAbs:
      types.push_back(t.name());
      collect_fnames(t.body(), types, terms);
      return;
    case FTerm::Tag::TyApp:
      collect_names(t.type(), types);
      collect_fnames(t.fn(), types, terms);
      return;
  }
}

bool is_operator_name(const std::string& x) {
  return x == "::" || x == "++" || x == "+";
}

class FPrinter {
 public:
  FPrinter(const FTerm& root, Charset cs) : cs_(cs) {
    std::vector<std::string> types, terms;
    collect_fnames(root, types, terms);
    auto taken = [](const std::vector<std::string>& names,
                    const std::string& cand) {
      return std::find(names.begin(), names.end(), cand) != names.end();
    };
    std::size_t next = 0;
    for (const auto& n : types) {
      if (!is_internal_name(n) || type_map_.count(n)) continue;
      std::string cand;
      do {
        cand = std::string(1, static_cast<char>('a' + next % 26));
        if (next >= 26) cand += std::to_string(next / 26);
        ++next;
      } while (taken(types, cand));
      type_map_.emplace(n, std::move(cand));
    }
    for (const auto& n : terms) {
      if (!is_internal_name(n) || term_map_.count(n)) continue;
      std::string cand = n.substr(1);
      if (cand.empty() || !std::isalpha(static_cast<unsigned char>(cand[0]))) {
        cand = "x" + cand;
      }
      while (taken(terms, cand)) cand += '\'';
      term_map_.emplace(n, std::move(cand));
    }
  }

  enum class Ctx { Top, Fn, Arg };

  void term(const FTerm& t, std::string& out, Ctx ctx) {
    switch (t.tag()) {
      case FTerm::Tag::Var:
        out += var(t.name());
        return;
      case FTerm::Tag::IntLit:
        out += std::to_string(t.int_value());
        return;
      case FTerm::Tag::Lam:
        if (ctx != Ctx::Top) out += '(';
        out += cs_ == Charset::Unicode ? "λ" : "\\";
        out += var(t.name()) + ":" + type(t.type()) + ". ";
        term(t.body(), out, Ctx::Top);
        if (ctx != Ctx::Top) out += ')';
        return;
      case FTerm::Tag::TyAbs:
        if (ctx != Ctx::Top) out += '(';
        out += cs_ == Charset::Unicode ? "Λ" : "/\\";
        out += tyvar(t.name()) + ". ";
        term(t.body(), out, Ctx::Top);
        if (ctx != Ctx::Top) out += ')';
        return;
      case FTerm::Tag::App:
        if (ctx == Ctx::Arg) out += '(';
        term(t.fn(), out, Ctx::Fn);
        out += ' ';
        term(t.arg(), out, Ctx::Arg);
        if (ctx == Ctx::Arg) out += ')';
        return;
      case FTerm::Tag::TyApp:
        if (ctx == Ctx::Arg) out += '(';
        term(t.fn(), out, Ctx::Fn);
        out += " [" + type(t.type()) + "]";
        if (ctx == Ctx::Arg) out += ')';
        return;
    }
  }

 private:
  std::string var(const std::string& x) const {
    if (is_operator_name(x)) return "(" + x + ")";
    auto it = term_map_.find(x);
    return it == term_map_.end() ? x : it->second;
  }

  std::string tyvar(const std::string& a) const {
    auto it = type_map_.find(a);
    return it == type_map_.end() ? a : it->second;
  }

  std::string type(const Type& t) const {
    Type shown = type_map_.empty() ? t : rename_all(t);
    return render_type(shown, RenderOptions{false, cs_});
  }

  // Renames free and bound occurrences alike; the map is injective and
  // avoids every user name, so no capture can arise.
  Type rename_all(const Type& t) const {
    switch (t.tag()) {
      case Type::Tag::Var:
        return Type::var(tyvar(t.name()));
      case Type::Tag::Forall:
        return Type::forall(tyvar(t.name()), rename_all(t.body()));
      case Type::Tag::Con: {
        std::vector<Type> args;
        for (const Type& a : t.args()) args.push_back(rename_all(a));
        return Type::con(t.con(), std::move(args));
      }
    }
    return t;
  }

  Charset cs_;
  std::map<std::string, std::string> type_map_;
  std::map<std::string, std::string> term_map_;
};

using detail::Tok;
using detail::TokenStream;

class FParser {
 public:
  explicit FParser(std::string_view src) : ts_(src) {}

  FTerm whole() {
    FTerm t = term();
    if (!ts_.at(Tok::End)) ts_.unexpected("end of input");
    return t;
  }

 private:
  FTerm term() {
    TokenStream::Depth guard(ts_);
    if (ts_.accept(Tok::BigLambda)) {
      std::vector<std::string> vars;
      do {
        vars.push_back(ts_.expect(Tok::Ident, "a type variable").text);
      } while (ts_.at(Tok::Ident));
      ts_.expect(Tok::Dot);
      return f_ty_abs(vars, term());
    }
    if (ts_.accept(Tok::Lambda)) {
      bool paren = ts_.accept(Tok::LParen);
      std::string x = ts_.expect(Tok::Ident, "a variable").text;
      ts_.expect(Tok::Colon);
      Type a = detail::parse_type_from(ts_);
      if (paren) ts_.expect(Tok::RParen);
      ts_.expect(Tok::Dot);
      return FTerm::lam(std::move(x), std::move(a), term());
    }
    return app();
  }

  bool atom_start() const {
    return ts_.at(Tok::Ident) || ts_.at(Tok::Int) || ts_.at(Tok::LParen) ||
           ts_.at(Tok::LBracket);
  }

  FTerm app() {
    FTerm head = atom();
    for (;;) {
      // "[]" is the empty-list constant; a type argument is never empty.
      if (ts_.at(Tok::LBracket) && !ts_.at(Tok::RBracket, 1)) {
        ts_.next();
        Type a = detail::parse_type_from(ts_);
        ts_.expect(Tok::RBracket);
        head = FTerm::ty_app(std::move(head), std::move(a));
      } else if (atom_start()) {
        head = FTerm::app(std::move(head), atom());
      } else if (ts_.at(Tok::Lambda) || ts_.at(Tok::BigLambda)) {
        return FTerm::app(std::move(head), term());
      } else {
        return head;
      }
    }
  }

  FTerm atom() {
    TokenStream::Depth guard(ts_);
    if (ts_.at(Tok::Ident)) return FTerm::var(ts_.next().text);
    if (ts_.at(Tok::Int)) return FTerm::int_lit(ts_.next().value);
    if (ts_.at(Tok::LBracket) && ts_.at(Tok::RBracket, 1)) {
      ts_.next();
      ts_.next();
      return FTerm::var("[]");
    }
    if (ts_.accept(Tok::LParen)) {
      if ((ts_.at(Tok::Cons) || ts_.at(Tok::Append) || ts_.at(Tok::Plus)) &&
          ts_.at(Tok::RParen, 1)) {
        std::string op = ts_.next().text;
        ts_.next();
        return FTerm::var(std::move(op));
      }
      FTerm t = term();
      ts_.expect(Tok::RParen);
      return t;
    }
    ts_.unexpected("a System F term");
  }

  TokenStream ts_;
};

}  // namespace

void collect_type_names(const FTerm& t, std::vector<std::string>& out) {
  std::vector<std::string> terms;
  collect_fnames(t, out, terms);
}

std::string render_fterm(const FTerm& t, Charset charset) {
  std::string out;
  FPrinter(t, charset).term(t, out, FPrinter::Ctx::Top);
  return out;
}

FTerm parse_fterm(std::string_view text) { return FParser(text).whole(); }

}  // namespace freezeml
