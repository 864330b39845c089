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

#include "lexer.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace freezeml::detail {

namespace {

constexpr int kMaxDepth = 400;

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back(Token{Tok::End, "end of input", 0, span(pos_, pos_)});
        return out;
      }
      out.push_back(one());
    }
  }

 private:
  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        line_start_ = ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (src_.substr(pos_, 2) == "--") {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  SourceSpan span(std::size_t b, std::size_t e) const {
    return SourceSpan{b, e, line_, static_cast<int>(b - line_start_) + 1};
  }

  Token make(Tok k, std::size_t len) {
    std::size_t b = pos_;
    pos_ += len;
    return Token{k, std::string(src_.substr(b, len)), 0, span(b, pos_)};
  }

  bool starts(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  Token one() {
    char c = src_[pos_];
    if (ident_start(c)) {
      std::size_t b = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      std::string text(src_.substr(b, pos_ - b));
      Tok k = Tok::Ident;
      if (text == "let") k = Tok::Let;
      else if (text == "in") k = Tok::In;
      else if (text == "forall") k = Tok::Forall;
      return Token{k, std::move(text), 0, span(b, pos_)};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      Token t{Tok::Int, std::string(src_.substr(b, pos_ - b)), 0, span(b, pos_)};
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(),
                                     t.value);
      if (ec != std::errc()) {
        throw Error(ErrorCode::Syntax, "integer literal out of range", t.span);
      }
      return t;
    }
    struct Fixed {
      std::string_view text;
      Tok kind;
    };
    static constexpr Fixed kFixed[] = {
        {"->", Tok::Arrow},  {"::", Tok::Cons},     {"++", Tok::Append},
        {"/\\", Tok::BigLambda},
        {"\xCE\xBB", Tok::Lambda},      // λ
        {"\xCE\x9B", Tok::BigLambda},   // Λ
        {"\xE2\x88\x80", Tok::Forall},  // ∀
        {"\xE2\x86\x92", Tok::Arrow},   // →
        {"\\", Tok::Lambda}, {".", Tok::Dot},       {"(", Tok::LParen},
        {")", Tok::RParen},  {"[", Tok::LBracket},  {"]", Tok::RBracket},
        {",", Tok::Comma},   {":", Tok::Colon},     {"=", Tok::Equals},
        {";", Tok::Semi},    {"~", Tok::Tilde},     {"$", Tok::Dollar},
        {"@", Tok::At},      {"+", Tok::Plus},
    };
    for (const Fixed& f : kFixed) {
      if (starts(f.text)) return make(f.kind, f.text.size());
    }
    SourceSpan s = span(pos_, pos_ + 1);
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string("'") + c + "'"
                            : "byte " + std::to_string(static_cast<unsigned char>(c));
    throw Error(ErrorCode::Syntax, "unexpected character " + shown, s);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
};

}  // namespace

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer literal";
    case Tok::Let: return "'let'";
    case Tok::In: return "'in'";
    case Tok::Forall: return "'forall'";
    case Tok::Lambda: return "'\\'";
    case Tok::BigLambda: return "'/\\'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::Semi: return "';'";
    case Tok::Tilde: return "'~'";
    case Tok::Dollar: return "'$'";
    case Tok::At: return "'@'";
    case Tok::Arrow: return "'->'";
    case Tok::Cons: return "'::'";
    case Tok::Append: return "'++'";
    case Tok::Plus: return "'+'";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view src) { return Lexer(src).run(); }

const Token& TokenStream::expect(Tok k, std::string_view what) {
  if (!at(k)) unexpected(what.empty() ? describe(k) : what);
  return next();
}

void TokenStream::unexpected(std::string_view wanted) const {
  const Token& t = peek();
  std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  throw Error(ErrorCode::Syntax,
              "expected " + std::string(wanted) + " but found " + got, t.span);
}

TokenStream::Depth::Depth(TokenStream& ts) : ts_(ts) {
  if (++ts_.depth_ > kMaxDepth) {
    --ts_.depth_;
    throw Error(ErrorCode::Syntax, "input nested too deeply", ts_.peek().span);
  }
}

SourceSpan join_spans(const SourceSpan& a, const SourceSpan& b) {
  if (!a.valid()) return b;
  if (!b.valid()) return a;
  SourceSpan s = a;
  s.begin = std::min(a.begin, b.begin);
  s.end = std::max(a.end, b.end);
  return s;
}

namespace {

Type parse_type_atom(TokenStream& ts);

bool type_atom_start(const TokenStream& ts) {
  return ts.at(Tok::Ident) || ts.at(Tok::LParen) || ts.at(Tok::LBracket);
}

// Constructor application or a lone atom.
Type parse_type_app(TokenStream& ts) {
  TokenStream::Depth guard(ts);
  if (ts.at(Tok::Ident)) {
    if (auto c = cons::lookup(ts.peek().text);
        c && c->name != cons::Arrow.name) {
      Token head = ts.next();
      std::vector<Type> args;
      while (type_atom_start(ts) &&
             static_cast<int>(args.size()) < c->arity) {
        args.push_back(parse_type_atom(ts));
      }
      if (static_cast<int>(args.size()) != c->arity || type_atom_start(ts)) {
        std::size_t given = args.size();
        while (type_atom_start(ts)) {
          parse_type_atom(ts);
          ++given;
        }
        throw Error(ErrorCode::Arity,
                    "type constructor " + c->name + " expects " +
                        std::to_string(c->arity) + " argument(s), got " +
                        std::to_string(given),
                    head.span);
      }
      return Type::con(*c, std::move(args));
    }
  }
  Type t = parse_type_atom(ts);
  if (type_atom_start(ts)) {
    throw Error(ErrorCode::Syntax,
                "only type constructors can be applied to arguments",
                ts.peek().span);
  }
  return t;
}

Type parse_type_atom(TokenStream& ts) {
  TokenStream::Depth guard(ts);
  if (ts.at(Tok::Ident)) {
    const Token& t = ts.next();
    if (auto c = cons::lookup(t.text)) {
      if (c->arity != 0) {
        throw Error(ErrorCode::Arity,
                    "type constructor " + c->name + " expects " +
                        std::to_string(c->arity) + " argument(s), got 0",
                    t.span);
      }
      return Type::con(*c, {});
    }
    return Type::var(t.text);
  }
  if (ts.accept(Tok::LBracket)) {
    Type elem = parse_type_from(ts);
    ts.expect(Tok::RBracket);
    return list_type(std::move(elem));
  }
  if (ts.accept(Tok::LParen)) {
    Type first = parse_type_from(ts);
    if (ts.accept(Tok::Comma)) {
      Type second = parse_type_from(ts);
      ts.expect(Tok::RParen);
      return pair_type(std::move(first), std::move(second));
    }
    ts.expect(Tok::RParen);
    return first;
  }
  ts.unexpected("a type");
}

}  // namespace

Type parse_type_from(TokenStream& ts) {
  TokenStream::Depth guard(ts);
  if (ts.accept(Tok::Forall)) {
    std::vector<std::string> vars;
    do {
      const Token& v = ts.expect(Tok::Ident, "a type variable");
      if (cons::lookup(v.text)) {
        throw Error(ErrorCode::Syntax,
                    "cannot quantify over type constructor " + v.text, v.span);
      }
      if (std::find(vars.begin(), vars.end(), v.text) != vars.end()) {
        throw Error(ErrorCode::Syntax,
                    "duplicate quantified variable " + v.text, v.span);
      }
      vars.push_back(v.text);
    } while (ts.at(Tok::Ident));
    ts.expect(Tok::Dot);
    return rebuild(vars, parse_type_from(ts));
  }
  Type lhs = parse_type_app(ts);
  if (ts.accept(Tok::Arrow)) return arrow(std::move(lhs), parse_type_from(ts));
  return lhs;
}

}  // namespace freezeml::detail
