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

#include "freezeml/type.hpp"

#include <algorithm>
#include <utility>

#include "freezeml/diagnostics.hpp"

namespace freezeml {

std::string_view to_string(Kind k) { return k == Kind::Mono ? "•" : "★"; }

namespace cons {
std::optional<TypeCon> lookup(std::string_view name) {
  for (const TypeCon* c : {&Int, &Bool, &List, &Arrow, &Pair, &ST}) {
    if (c->name == name) return *c;
  }
  return std::nullopt;
}
}  // namespace cons

struct Type::Node {
  Tag tag;
  std::string name;
  TypeCon con;
  std::vector<Type> args;  // Forall keeps its body in args[0]
};

Type Type::var(std::string name) {
  return Type(std::make_shared<const Node>(
      Node{Tag::Var, std::move(name), TypeCon{}, {}}));
}

Type Type::con(TypeCon con, std::vector<Type> args) {
  if (static_cast<int>(args.size()) != con.arity) {
    throw Error(ErrorCode::Arity,
                "type constructor " + con.name + " expects " +
                    std::to_string(con.arity) + " argument(s), got " +
                    std::to_string(args.size()));
  }
  return Type(std::make_shared<const Node>(
      Node{Tag::Con, std::string(), std::move(con), std::move(args)}));
}

Type Type::forall(std::string var, Type body) {
  std::vector<Type> args;
  args.push_back(std::move(body));
  return Type(std::make_shared<const Node>(
      Node{Tag::Forall, std::move(var), TypeCon{}, std::move(args)}));
}

Type Type::forall(std::span<const std::string> vars, Type body) {
  return rebuild(vars, std::move(body));
}

Type::Tag Type::tag() const { return node_->tag; }
const std::string& Type::name() const { return node_->name; }
const TypeCon& Type::con() const { return node_->con; }
std::span<const Type> Type::args() const {
  return is_con() ? std::span<const Type>(node_->args) : std::span<const Type>();
}
const Type& Type::body() const { return node_->args.front(); }

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Type::Tag::Var:
      return a.name() == b.name();
    case Type::Tag::Forall:
      return a.name() == b.name() && a.body() == b.body();
    case Type::Tag::Con:
      return a.con() == b.con() &&
             std::equal(a.args().begin(), a.args().end(), b.args().begin());
  }
  return false;
}

Type int_type() {
  static const Type t = Type::con(cons::Int, {});
  return t;
}
Type bool_type() {
  static const Type t = Type::con(cons::Bool, {});
  return t;
}
Type list_type(Type elem) { return Type::con(cons::List, {std::move(elem)}); }
Type arrow(Type from, Type to) {
  return Type::con(cons::Arrow, {std::move(from), std::move(to)});
}
Type pair_type(Type first, Type second) {
  return Type::con(cons::Pair, {std::move(first), std::move(second)});
}
Type st_type(Type state, Type result) {
  return Type::con(cons::ST, {std::move(state), std::move(result)});
}

bool is_monotype(const Type& t) {
  switch (t.tag()) {
    case Type::Tag::Var:
      return true;
    case Type::Tag::Forall:
      return false;
    case Type::Tag::Con:
      return std::all_of(t.args().begin(), t.args().end(), is_monotype);
  }
  return false;
}

bool is_guarded(const Type& t) { return !t.is_forall(); }

Decomposed decompose(const Type& t) {
  Decomposed d{{}, t};
  while (d.body.is_forall()) {
    d.prefix.push_back(d.body.name());
    Type next = d.body.body();
    d.body = std::move(next);
  }
  return d;
}

Type rebuild(std::span<const std::string> prefix, Type body) {
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    body = Type::forall(*it, std::move(body));
  }
  return body;
}

namespace {

void ftv_walk(const Type& t, std::vector<std::string>& bound,
              std::vector<std::string>& out) {
  switch (t.tag()) {
    case Type::Tag::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end() &&
          std::find(out.begin(), out.end(), t.name()) == out.end()) {
        out.push_back(t.name());
      }
      return;
    case Type::Tag::Forall:
      bound.push_back(t.name());
      ftv_walk(t.body(), bound, out);
      bound.pop_back();
      return;
    case Type::Tag::Con:
      for (const Type& a : t.args()) ftv_walk(a, bound, out);
      return;
  }
}

bool occurs_walk(std::string_view name, const Type& t) {
  switch (t.tag()) {
    case Type::Tag::Var:
      return t.name() == name;
    case Type::Tag::Forall:
      return t.name() != name && occurs_walk(name, t.body());
    case Type::Tag::Con:
      return std::any_of(t.args().begin(), t.args().end(),
                         [&](const Type& a) { return occurs_walk(name, a); });
  }
  return false;
}

// Index of the innermost binder for name, counted from the top of the
// stack, or -1 if free.
long binder_index(const std::vector<const std::string*>& stack,
                  const std::string& name) {
  for (std::size_t i = stack.size(); i-- > 0;) {
    if (*stack[i] == name) return static_cast<long>(stack.size() - i);
  }
  return -1;
}

bool alpha_walk(const Type& a, const Type& b,
                std::vector<const std::string*>& sa,
                std::vector<const std::string*>& sb) {
  if (a.tag() != b.tag()) return false;
  switch (a.tag()) {
    case Type::Tag::Var: {
      long ia = binder_index(sa, a.name());
      long ib = binder_index(sb, b.name());
      if (ia != ib) return false;
      return ia >= 0 || a.name() == b.name();
    }
    case Type::Tag::Forall: {
      sa.push_back(&a.name());
      sb.push_back(&b.name());
      bool eq = alpha_walk(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return eq;
    }
    case Type::Tag::Con: {
      if (a.con() != b.con()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (!alpha_walk(a.arg(i), b.arg(i), sa, sb)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::string> ftv_ordered(const Type& t) {
  std::vector<std::string> out;
  ftv_ordered_into(t, out);
  return out;
}

void ftv_ordered_into(const Type& t, std::vector<std::string>& out) {
  std::vector<std::string> bound;
  ftv_walk(t, bound, out);
}

bool occurs_free(std::string_view name, const Type& t) {
  return occurs_walk(name, t);
}

bool alpha_eq(const Type& a, const Type& b) {
  if (a.identity() == b.identity()) return true;
  std::vector<const std::string*> sa, sb;
  return alpha_walk(a, b, sa, sb);
}

void collect_names(const Type& t, std::vector<std::string>& out) {
  switch (t.tag()) {
    case Type::Tag::Var:
    case Type::Tag::Forall:
      if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
        out.push_back(t.name());
      }
      if (t.is_forall()) collect_names(t.body(), out);
      return;
    case Type::Tag::Con:
      for (const Type& a : t.args()) collect_names(a, out);
      return;
  }
}

}  // namespace freezeml
