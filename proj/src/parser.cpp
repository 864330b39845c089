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

#include "freezeml/parser.hpp"

#include <string>
#include <utility>
#include <vector>

#include "lexer.hpp"

namespace freezeml {

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;
using detail::join_spans;

struct Binder {
  std::string name;
  std::optional<Type> ann;
  SourceSpan span;
};

class TermParser {
 public:
  explicit TermParser(std::string_view src) : ts_(src) {}

  Term whole_term() {
    Term t = term();
    if (!ts_.at(Tok::End)) ts_.unexpected("end of input");
    return t;
  }

  Term program() {
    struct Decl {
      Token name;
      std::optional<Type> ann;
      Term bound;
    };
    std::vector<Decl> decls;
    while (ts_.at(Tok::Ident) &&
           (ts_.at(Tok::Colon, 1) || ts_.at(Tok::Equals, 1))) {
      Token name = ts_.next();
      std::optional<Type> ann;
      if (ts_.accept(Tok::Colon)) ann = detail::parse_type_from(ts_);
      ts_.expect(Tok::Equals);
      Term bound = term();
      ts_.expect(Tok::Semi);
      decls.push_back(Decl{std::move(name), std::move(ann), std::move(bound)});
    }
    if (ts_.at(Tok::End)) {
      throw Error(ErrorCode::MissingFinalTerm,
                  "program has no final term to evaluate", ts_.peek().span);
    }
    Term body = whole_term();
    for (auto it = decls.rbegin(); it != decls.rend(); ++it) {
      SourceSpan s = join_spans(it->name.span, body.span());
      body = it->ann ? Term::let_ann(it->name.text, *it->ann, it->bound, body, s)
                     : Term::let(it->name.text, it->bound, body, s);
    }
    return body;
  }

 private:
  Term term() {
    TokenStream::Depth guard(ts_);
    if (ts_.at(Tok::Lambda)) return lambda();
    if (ts_.at(Tok::Let)) return let();
    return cons_expr();
  }

  Term lambda() {
    SourceSpan start = ts_.next().span;
    std::vector<Binder> binders;
    do {
      binders.push_back(binder());
    } while (ts_.at(Tok::Ident) || ts_.at(Tok::LParen));
    ts_.expect(Tok::Dot);
    Term body = term();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      SourceSpan s = join_spans(it == binders.rend() - 1 ? start : it->span,
                                body.span());
      body = it->ann ? Term::lam_ann(it->name, *it->ann, body, s)
                     : Term::lam(it->name, body, s);
    }
    return body;
  }

  Binder binder() {
    if (ts_.accept(Tok::LParen)) {
      SourceSpan s = ts_.last_span();
      const Token& x = ts_.expect(Tok::Ident, "a variable");
      std::string name = x.text;
      ts_.expect(Tok::Colon);
      Type ann = detail::parse_type_from(ts_);
      ts_.expect(Tok::RParen);
      return Binder{std::move(name), std::move(ann),
                    join_spans(s, ts_.last_span())};
    }
    const Token& x = ts_.expect(Tok::Ident, "a variable or '('");
    return Binder{x.text, std::nullopt, x.span};
  }

  Term let() {
    SourceSpan start = ts_.next().span;
    Binder b = binder();
    ts_.expect(Tok::Equals);
    Term bound = term();
    ts_.expect(Tok::In);
    Term body = term();
    SourceSpan s = join_spans(start, body.span());
    return b.ann ? Term::let_ann(b.name, *b.ann, bound, body, s)
                 : Term::let(b.name, bound, body, s);
  }

  static Term binop(const char* op, Term lhs, Term rhs, SourceSpan op_span) {
    SourceSpan s = join_spans(lhs.span(), rhs.span());
    Term f = Term::app(Term::var(op, op_span), std::move(lhs),
                       join_spans(op_span, s));
    return Term::app(std::move(f), std::move(rhs), s);
  }

  // Right-associative :: and ++ over left-associative +.
  Term cons_expr() {
    TokenStream::Depth guard(ts_);
    Term lhs = add_expr();
    if (ts_.at(Tok::Cons) || ts_.at(Tok::Append)) {
      const Token& op = ts_.next();
      const char* name = op.kind == Tok::Cons ? "::" : "++";
      SourceSpan op_span = op.span;
      Term rhs = operand_or_binder();
      return binop(name, std::move(lhs), std::move(rhs), op_span);
    }
    return lhs;
  }

  Term operand_or_binder() {
    if (ts_.at(Tok::Lambda)) return lambda();
    if (ts_.at(Tok::Let)) return let();
    return cons_expr();
  }

  Term add_expr() {
    Term lhs = app();
    while (ts_.at(Tok::Plus)) {
      SourceSpan op_span = ts_.next().span;
      Term rhs = app();
      lhs = binop("+", std::move(lhs), std::move(rhs), op_span);
    }
    return lhs;
  }

  bool post_start() const {
    return ts_.at(Tok::Ident) || ts_.at(Tok::Int) || ts_.at(Tok::Tilde) ||
           ts_.at(Tok::Dollar) || ts_.at(Tok::LParen) || ts_.at(Tok::LBracket);
  }

  Term app() {
    Term head = post();
    while (post_start() || ts_.at(Tok::Lambda) || ts_.at(Tok::Let)) {
      if (ts_.at(Tok::Lambda) || ts_.at(Tok::Let)) {
        // A trailing lambda or let extends to the right as the last argument.
        Term last = ts_.at(Tok::Lambda) ? lambda() : let();
        SourceSpan s = join_spans(head.span(), last.span());
        return Term::app(std::move(head), std::move(last), s);
      }
      Term a = post();
      SourceSpan s = join_spans(head.span(), a.span());
      head = Term::app(std::move(head), std::move(a), s);
    }
    return head;
  }

  Term post() {
    Term t = prefix();
    while (ts_.accept(Tok::At)) {
      t = Term::inst(std::move(t), join_spans(t.span(), ts_.last_span()));
    }
    return t;
  }

  Term prefix() {
    if (ts_.accept(Tok::Dollar)) {
      SourceSpan s = ts_.last_span();
      Term inner = atom();
      return Term::gen(inner, join_spans(s, inner.span()));
    }
    return atom();
  }

  bool is_operator(std::size_t ahead) {
    return ts_.at(Tok::Cons, ahead) || ts_.at(Tok::Append, ahead) ||
           ts_.at(Tok::Plus, ahead);
  }

  static const char* operator_name(Tok k) {
    return k == Tok::Cons ? "::" : k == Tok::Append ? "++" : "+";
  }

  Term atom() {
    TokenStream::Depth guard(ts_);
    if (ts_.at(Tok::Ident)) {
      const Token& x = ts_.next();
      return Term::var(x.text, x.span);
    }
    if (ts_.at(Tok::Int)) {
      const Token& n = ts_.next();
      return Term::int_lit(n.value, n.span);
    }
    if (ts_.accept(Tok::Tilde)) {
      SourceSpan s = ts_.last_span();
      // Builtin names freeze too: ~(::), ~(++), ~(+) and ~[].
      if (ts_.at(Tok::LParen) && is_operator(1) && ts_.at(Tok::RParen, 2)) {
        ts_.next();
        const char* name = operator_name(ts_.next().kind);
        ts_.next();
        return Term::freeze(name, join_spans(s, ts_.last_span()));
      }
      if (ts_.at(Tok::LBracket) && ts_.at(Tok::RBracket, 1)) {
        ts_.next();
        ts_.next();
        return Term::freeze("[]", join_spans(s, ts_.last_span()));
      }
      const Token& x = ts_.expect(Tok::Ident, "a variable after '~'");
      return Term::freeze(x.text, join_spans(s, x.span));
    }
    if (ts_.accept(Tok::LParen)) {
      SourceSpan open = ts_.last_span();
      if (is_operator(0) && ts_.at(Tok::RParen, 1)) {
        const char* name = operator_name(ts_.next().kind);
        ts_.next();
        return Term::var(name, join_spans(open, ts_.last_span()));
      }
      Term first = term();
      if (ts_.accept(Tok::Comma)) {
        Term second = term();
        ts_.expect(Tok::RParen);
        SourceSpan s = join_spans(open, ts_.last_span());
        Term f = Term::app(Term::var("pair", open), std::move(first), s);
        return Term::app(std::move(f), std::move(second), s);
      }
      ts_.expect(Tok::RParen);
      return first;
    }
    if (ts_.accept(Tok::LBracket)) {
      SourceSpan open = ts_.last_span();
      std::vector<Term> elems;
      if (!ts_.at(Tok::RBracket)) {
        do {
          elems.push_back(term());
        } while (ts_.accept(Tok::Comma));
      }
      ts_.expect(Tok::RBracket);
      SourceSpan s = join_spans(open, ts_.last_span());
      Term list = Term::var("[]", s);
      for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
        list = Term::app(Term::app(Term::var("::", s), *it, s), list, s);
      }
      return list;
    }
    ts_.unexpected("a term");
  }

  TokenStream ts_;
};

}  // namespace

Type parse_type(std::string_view text) {
  TokenStream ts(text);
  Type t = detail::parse_type_from(ts);
  if (!ts.at(Tok::End)) ts.unexpected("end of input");
  return t;
}

Term parse_term(std::string_view text) { return TermParser(text).whole_term(); }

Term parse_program(std::string_view text) { return TermParser(text).program(); }

}  // namespace freezeml
