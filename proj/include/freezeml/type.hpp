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

#ifndef FREEZEML_TYPE_HPP
#define FREEZEML_TYPE_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freezeml {

// Monomorphic (•) or possibly polymorphic (★).
enum class Kind { Mono, Poly };

inline Kind join(Kind a, Kind b) {
  return a == Kind::Mono && b == Kind::Mono ? Kind::Mono : Kind::Poly;
}
inline bool kind_leq(Kind a, Kind b) { return join(a, b) == b; }
std::string_view to_string(Kind k);

struct TypeCon {
  std::string name;
  int arity = 0;

  friend bool operator==(const TypeCon&, const TypeCon&) = default;
};

namespace cons {
inline const TypeCon Int{"Int", 0};
inline const TypeCon Bool{"Bool", 0};
inline const TypeCon List{"List", 1};
inline const TypeCon Arrow{"->", 2};
inline const TypeCon Pair{"Pair", 2};
inline const TypeCon ST{"ST", 2};

// Built-in constructor by name, if any.
std::optional<TypeCon> lookup(std::string_view name);
}  // namespace cons

// Immutable System F type: a | D A... | forall a. A.
//
// Nodes are shared; copying a Type is cheap. operator== is syntactic
// equality (bound names must match); use alpha_eq for equality up to
// renaming of bound variables.
class Type {
 public:
  enum class Tag { Var, Con, Forall };

  static Type var(std::string name);
  // Throws Error(Arity) if args.size() != con.arity.
  static Type con(TypeCon con, std::vector<Type> args);
  static Type forall(std::string var, Type body);
  static Type forall(std::span<const std::string> vars, Type body);

  Tag tag() const;
  bool is_var() const { return tag() == Tag::Var; }
  bool is_con() const { return tag() == Tag::Con; }
  bool is_forall() const { return tag() == Tag::Forall; }
  bool is_con(const TypeCon& c) const { return is_con() && con() == c; }

  // Variable name for Var, bound variable for Forall.
  const std::string& name() const;
  const TypeCon& con() const;
  std::span<const Type> args() const;
  const Type& arg(std::size_t i) const { return args()[i]; }
  const Type& body() const;

  // Identity of the shared node; equal pointers imply equal types.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Type int_type();
Type bool_type();
Type list_type(Type elem);
Type arrow(Type from, Type to);
Type pair_type(Type first, Type second);
Type st_type(Type state, Type result);

// Class S: no quantifier anywhere.
bool is_monotype(const Type& t);
// Class H: root is not a quantifier.
bool is_guarded(const Type& t);

// A = forall prefix. body, with body guarded.
struct Decomposed {
  std::vector<std::string> prefix;
  Type body;
};
Decomposed decompose(const Type& t);
Type rebuild(std::span<const std::string> prefix, Type body);

// Distinct free variables in first-occurrence order.
std::vector<std::string> ftv_ordered(const Type& t);
void ftv_ordered_into(const Type& t, std::vector<std::string>& out);
bool occurs_free(std::string_view name, const Type& t);

bool alpha_eq(const Type& a, const Type& b);

// All variable names occurring in t, free or bound.
void collect_names(const Type& t, std::vector<std::string>& out);

}  // namespace freezeml

#endif  // FREEZEML_TYPE_HPP
