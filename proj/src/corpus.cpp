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

#include "freezeml/corpus.hpp"

#include <string>

#include "freezeml/diagnostics.hpp"
#include "freezeml/infer.hpp"
#include "freezeml/parser.hpp"
#include "freezeml/printer.hpp"
#include "freezeml/subst.hpp"

namespace freezeml {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_row(int line, const std::string& why) {
  SourceSpan s{0, 0, line, 1};
  throw Error(ErrorCode::Syntax, "corpus row: " + why, s);
}

CorpusRow parse_row(std::string_view text, int line) {
  CorpusRow row;
  row.line = line;
  auto colon = text.find(": ");
  if (colon == std::string_view::npos) bad_row(line, "missing label");
  row.label = std::string(trim(text.substr(0, colon)));
  std::string_view rest = text.substr(colon + 2);

  std::string_view turnstile = "⊢";
  auto t = rest.find(turnstile);
  if (t == std::string_view::npos) {
    turnstile = "|-";
    t = rest.find(turnstile);
  }
  if (t == std::string_view::npos) bad_row(line, "missing turnstile");
  row.term = std::string(trim(rest.substr(0, t)));
  std::string_view rhs = rest.substr(t + turnstile.size());

  auto w = rhs.find(" where ");
  if (w != std::string_view::npos) {
    std::string_view clause = rhs.substr(w + 7);
    rhs = rhs.substr(0, w);
    while (!trim(clause).empty()) {
      auto semi = clause.find(';');
      std::string_view item = trim(clause.substr(0, semi));
      clause = semi == std::string_view::npos ? std::string_view{}
                                              : clause.substr(semi + 1);
      auto c = item.find(" : ");
      if (c == std::string_view::npos) bad_row(line, "malformed where-clause");
      row.where.emplace_back(std::string(trim(item.substr(0, c))),
                             std::string(trim(item.substr(c + 3))));
    }
  }
  rhs = trim(rhs);
  if (rhs.empty()) bad_row(line, "missing expected type");
  if (rhs != "FAIL") row.expected = std::string(rhs);
  if (row.label.empty() || row.term.empty()) bad_row(line, "empty field");
  return row;
}

}  // namespace

std::vector<CorpusRow> parse_corpus(std::string_view text) {
  std::vector<CorpusRow> rows;
  int line = 0;
  while (!text.empty()) {
    ++line;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::string_view s = trim(raw);
    if (s.empty() || s.starts_with("--")) continue;
    rows.push_back(parse_row(s, line));
  }
  return rows;
}

TypeEnv row_env(const CorpusRow& row, const TypeEnv& base) {
  TypeEnv env = base;
  for (const auto& [x, sig] : row.where) env.push(x, parse_type(sig));
  return env;
}

bool same_up_to_renaming(const Type& a, const Type& b) {
  auto fa = ftv_ordered(a);
  auto fb = ftv_ordered(b);
  if (fa.size() != fb.size()) return false;
  TypeMap ma, mb;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    // '#' cannot occur in a parsed or generated name.
    Type common = Type::var("#" + std::to_string(i));
    ma.set(fa[i], common);
    mb.set(fb[i], common);
  }
  return alpha_eq(apply(ma, a), apply(mb, b));
}

RowOutcome check_row(const CorpusRow& row, const TypeEnv& base) {
  RowOutcome out;
  TypeEnv env = row_env(row, base);
  Term m = parse_program(row.term);
  Type got = int_type();
  try {
    got = infer_top(env, m);
  } catch (const Error& e) {
    if (is_syntax_error(e.code())) throw;
    out.got = std::string("rejected: ") + e.what();
    out.pass = !row.expected.has_value();
    return out;
  }
  out.got = render_type(got);
  out.pass = row.expected && same_up_to_renaming(got, parse_type(*row.expected));
  return out;
}

}  // namespace freezeml
