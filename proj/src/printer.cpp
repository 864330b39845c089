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

#include "freezeml/printer.hpp"

#include <algorithm>
#include <map>

#include "freezeml/env.hpp"

namespace freezeml {

namespace {

// a, b, ..., z, a1, b1, ...
std::string letter_name(std::size_t i) {
  std::string s(1, static_cast<char>('a' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

class TypePrinter {
 public:
  TypePrinter(const std::vector<Type>& types, RenderOptions opts)
      : opts_(opts) {
    if (!opts_.normalize) return;
    for (const Type& t : types) {
      std::vector<std::string> names;
      collect_names(t, names);
      for (auto& n : names) {
        if (!is_internal_name(n)) taken_.push_back(std::move(n));
      }
    }
    std::vector<std::string> free;
    for (const Type& t : types) ftv_ordered_into(t, free);
    for (const auto& n : free) {
      if (is_internal_name(n)) free_map_[n] = pick({});
    }
  }

  std::string render(const Type& t) {
    std::string out;
    std::vector<std::pair<std::string, std::string>> scope;
    type(t, out, scope);
    return out;
  }

 private:
  using Scope = std::vector<std::pair<std::string, std::string>>;

  bool unicode() const { return opts_.charset == Charset::Unicode; }

  std::string pick(const Scope& scope) {
    for (std::size_t i = 0;; ++i) {
      std::string cand = letter_name(i);
      if (std::find(taken_.begin(), taken_.end(), cand) != taken_.end()) continue;
      bool used = false;
      for (const auto& [k, v] : free_map_) used |= v == cand;
      for (const auto& [k, v] : scope) used |= v == cand;
      if (!used) return cand;
    }
  }

  std::string var_name(const std::string& n, const Scope& scope) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first == n) return it->second;
    }
    if (auto it = free_map_.find(n); it != free_map_.end()) return it->second;
    return n;
  }

  // Precedence: 0 = full type, 1 = left of an arrow, 2 = constructor argument.
  void type(const Type& t, std::string& out, Scope& scope, int prec = 0) {
    switch (t.tag()) {
      case Type::Tag::Var:
        out += var_name(t.name(), scope);
        return;
      case Type::Tag::Forall: {
        if (prec > 0) out += '(';
        out += unicode() ? "∀" : "forall ";
        std::size_t mark = scope.size();
        const Type* cur = &t;
        bool first = true;
        // A repeated binder starts a new group, since "forall a a." would
        // not parse back.
        auto repeats = [&](const std::string& n) {
          for (std::size_t i = mark; i < scope.size(); ++i) {
            if (scope[i].first == n) return true;
          }
          return false;
        };
        while (cur->is_forall() && !repeats(cur->name())) {
          std::string shown = cur->name();
          if (opts_.normalize && is_internal_name(shown)) shown = pick(scope);
          scope.emplace_back(cur->name(), shown);
          if (!first) out += ' ';
          out += shown;
          first = false;
          cur = &cur->body();
        }
        out += ". ";
        type(*cur, out, scope, 0);
        scope.resize(mark);
        if (prec > 0) out += ')';
        return;
      }
      case Type::Tag::Con:
        break;
    }
    const TypeCon& c = t.con();
    if (c == cons::Arrow) {
      if (prec > 0) out += '(';
      type(t.arg(0), out, scope, 1);
      out += unicode() ? " → " : " -> ";
      type(t.arg(1), out, scope, 0);
      if (prec > 0) out += ')';
    } else if (c == cons::List) {
      out += '[';
      type(t.arg(0), out, scope, 0);
      out += ']';
    } else if (c == cons::Pair) {
      out += '(';
      type(t.arg(0), out, scope, 0);
      out += ", ";
      type(t.arg(1), out, scope, 0);
      out += ')';
    } else if (t.args().empty()) {
      out += c.name;
    } else {
      if (prec > 1) out += '(';
      out += c.name;
      for (const Type& a : t.args()) {
        out += ' ';
        type(a, out, scope, 2);
      }
      if (prec > 1) out += ')';
    }
  }

  RenderOptions opts_;
  std::vector<std::string> taken_;
  std::map<std::string, std::string> free_map_;
};

bool is_operator_name(const std::string& x) {
  return x == "::" || x == "++" || x == "+";
}

std::string term_var(const std::string& x) {
  return is_operator_name(x) ? "(" + x + ")" : x;
}

class TermPrinter {
 public:
  explicit TermPrinter(Charset cs) : cs_(cs) {}

  enum class Ctx { Top, Fn, Arg };

  void term(const Term& m, std::string& out, Ctx ctx) {
    using T = Term::Tag;
    switch (m.tag()) {
      case T::Var:
        out += term_var(m.name());
        return;
      case T::Freeze:
        out += '~';
        out += term_var(m.name());
        return;
      case T::IntLit:
        out += std::to_string(m.int_value());
        return;
      case T::Lam:
      case T::LamAnn: {
        if (ctx != Ctx::Top) out += '(';
        out += cs_ == Charset::Unicode ? "λ" : "\\";
        if (m.is(T::Lam)) {
          out += m.name();
        } else {
          out += "(" + m.name() + ":" + type(m.annotation()) + ")";
        }
        out += '.';
        term(m.body(), out, Ctx::Top);
        if (ctx != Ctx::Top) out += ')';
        return;
      }
      case T::Let:
      case T::LetAnn: {
        if (ctx != Ctx::Top) out += '(';
        out += "let ";
        if (m.is(T::Let)) {
          out += m.name();
        } else {
          out += "(" + m.name() + " : " + type(m.annotation()) + ")";
        }
        out += " = ";
        term(m.bound(), out, Ctx::Top);
        out += " in ";
        term(m.body(), out, Ctx::Top);
        if (ctx != Ctx::Top) out += ')';
        return;
      }
      case T::App:
        if (ctx == Ctx::Arg) out += '(';
        term(m.fn(), out, Ctx::Fn);
        out += ' ';
        term(m.arg(), out, Ctx::Arg);
        if (ctx == Ctx::Arg) out += ')';
        return;
      case T::Gen:
        out += '$';
        atomic(m.body(), out, /*allow_post=*/false);
        return;
      case T::Inst:
        atomic(m.body(), out, /*allow_post=*/true);
        out += '@';
        return;
    }
  }

 private:
  void atomic(const Term& m, std::string& out, bool allow_post) {
    using T = Term::Tag;
    bool bare = m.is(T::Var) || m.is(T::Freeze) || m.is(T::IntLit) ||
                (allow_post && (m.is(T::Gen) || m.is(T::Inst)));
    if (bare) {
      term(m, out, Ctx::Arg);
    } else {
      out += '(';
      term(m, out, Ctx::Top);
      out += ')';
    }
  }

  std::string type(const Type& t) {
    return render_type(t, RenderOptions{false, cs_});
  }

  Charset cs_;
};

}  // namespace

std::string render_type(const Type& a, RenderOptions opts) {
  return TypePrinter({a}, opts).render(a);
}

std::vector<std::string> render_types(const std::vector<Type>& types,
                                      RenderOptions opts) {
  TypePrinter p(types, opts);
  std::vector<std::string> out;
  out.reserve(types.size());
  for (const Type& t : types) out.push_back(p.render(t));
  return out;
}

std::string render_term(const Term& m, Charset charset) {
  std::string out;
  TermPrinter(charset).term(m, out, TermPrinter::Ctx::Top);
  return out;
}

std::string display_name(std::string_view name) {
  if (is_internal_name(name)) return "?" + std::string(name.substr(1));
  return std::string(name);
}

}  // namespace freezeml
