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

// Tokenizer and type grammar shared by the FreezeML and System F parsers.

#ifndef FREEZEML_SRC_LEXER_HPP
#define FREEZEML_SRC_LEXER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "freezeml/diagnostics.hpp"
#include "freezeml/type.hpp"

namespace freezeml::detail {

enum class Tok {
  Ident,
  Int,
  Let,
  In,
  Forall,    // forall, ∀
  Lambda,    // \, λ
  BigLambda, // /\, Λ
  Dot,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Equals,
  Semi,
  Tilde,
  Dollar,
  At,
  Arrow,     // ->, →
  Cons,      // ::
  Append,    // ++
  Plus,      // +
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::int64_t value = 0;
  SourceSpan span;
};

std::string_view describe(Tok t);

// Throws Error(Syntax) on an unexpected character or an out-of-range
// integer literal.
std::vector<Token> tokenize(std::string_view src);

class TokenStream {
 public:
  explicit TokenStream(std::string_view src) : toks_(tokenize(src)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  const Token& next() {
    const Token& t = peek();
    last_ = t.span;
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  const Token& expect(Tok k, std::string_view what = {});
  [[noreturn]] void unexpected(std::string_view wanted) const;

  // Span of the most recently consumed token.
  const SourceSpan& last_span() const { return last_; }

  // Guards recursion so deeply nested input yields a diagnostic.
  class Depth {
   public:
    explicit Depth(TokenStream& ts);
    ~Depth() { --ts_.depth_; }
    Depth(const Depth&) = delete;
    Depth& operator=(const Depth&) = delete;

   private:
    TokenStream& ts_;
  };

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SourceSpan last_;
  int depth_ = 0;
};

SourceSpan join_spans(const SourceSpan& a, const SourceSpan& b);

// type := forall ident+ '.' type | app ('->' type)?
Type parse_type_from(TokenStream& ts);

}  // namespace freezeml::detail

#endif  // FREEZEML_SRC_LEXER_HPP
