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

#ifndef FREEZEML_SUBST_HPP
#define FREEZEML_SUBST_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freezeml/env.hpp"
#include "freezeml/type.hpp"

namespace freezeml {

// Finite ordered map from type variables to types. Entries mapping a
// variable to itself are kept: the domain matters for composition and
// for ftv(θ). Variables outside the domain are left unchanged by apply.
class TypeMap {
 public:
  using Entry = std::pair<std::string, Type>;

  TypeMap() = default;
  TypeMap(std::initializer_list<Entry> entries);
  explicit TypeMap(std::vector<Entry> entries);

  const Type* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<std::string> domain() const;
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // Adds or overwrites a binding, keeping the position of an existing one.
  void set(std::string name, Type image);
  TypeMap without(std::string_view name) const;
  TypeMap without(std::span<const std::string> names) const;
  // Image of name, or the variable itself when unmapped.
  Type operator()(std::string_view name) const;
  // True if every entry maps its variable to itself.
  bool is_identity() const;

 private:
  std::vector<Entry> entries_;
};

// δ and θ share a representation; the tag keeps them from being mixed up.
template <class Tag>
class BasicSubst : public TypeMap {
 public:
  using TypeMap::TypeMap;
  BasicSubst() = default;
  explicit BasicSubst(TypeMap m) : TypeMap(std::move(m)) {}

  BasicSubst without(std::string_view name) const {
    return BasicSubst(TypeMap::without(name));
  }
  BasicSubst without(std::span<const std::string> names) const {
    return BasicSubst(TypeMap::without(names));
  }
};

struct RigidTag {};
struct FlexTag {};
using Instantiation = BasicSubst<RigidTag>;  // δ over rigid variables
using Substitution = BasicSubst<FlexTag>;    // θ over flexible variables

// Capture-avoiding application. A binder that would capture a free
// variable of some image is renamed to "%N" with N past every index in
// play, so apply stays pure and deterministic.
Type apply(const TypeMap& m, const Type& a);
TypeEnv apply(const TypeMap& m, const TypeEnv& gamma);

// (outer ∘ inner)(a) = outer(inner(a)) over inner's domain.
Substitution compose(const Substitution& outer, const Substitution& inner);

// ι_Θ: every variable of Θ mapped to itself.
Substitution identity_subst(const RefinedKindEnv& theta);
Instantiation identity_inst(const KindEnv& delta);

// Ordered free variables of θ(a1) -> ... -> θ(an) over the domain.
std::vector<std::string> ftv(const TypeMap& m);

// Δ ⊢ θ : Θ ⇒ Θ′.
bool subst_wf(const KindEnv& delta, const Substitution& theta,
              const RefinedKindEnv& from, const RefinedKindEnv& to);

// Δ ⊢ δ : Δ′ ⇒_K Δ″.
bool inst_wf(const KindEnv& delta, const Instantiation& inst,
             const KindEnv& from, Kind k, const KindEnv& to);

// Demotes the listed variables of Θ to • when K is •.
RefinedKindEnv demote(Kind k, const RefinedKindEnv& theta,
                      std::span<const std::string> vars);

}  // namespace freezeml

#endif  // FREEZEML_SUBST_HPP
