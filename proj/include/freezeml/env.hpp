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

#ifndef FREEZEML_ENV_HPP
#define FREEZEML_ENV_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freezeml/type.hpp"

namespace freezeml {

// Δ: ordered rigid type variables, all of kind •. Names are distinct.
class KindEnv {
 public:
  KindEnv() = default;
  KindEnv(std::initializer_list<std::string> names);
  // Throws Error(ShadowedTyVar) on duplicates.
  explicit KindEnv(std::vector<std::string> names);

  bool contains(std::string_view name) const;
  bool empty() const { return names_.empty(); }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  auto begin() const { return names_.begin(); }
  auto end() const { return names_.end(); }

  void push(std::string name);
  // Δ, Δ′; the two must be disjoint.
  KindEnv concat(const KindEnv& more) const;
  KindEnv concat(std::span<const std::string> more) const;
  bool disjoint(const KindEnv& other) const;

  friend bool operator==(const KindEnv&, const KindEnv&) = default;

 private:
  std::vector<std::string> names_;
};

// Θ: ordered flexible type variables with kinds.
class RefinedKindEnv {
 public:
  using Entry = std::pair<std::string, Kind>;

  RefinedKindEnv() = default;
  RefinedKindEnv(std::initializer_list<Entry> entries);
  explicit RefinedKindEnv(std::vector<Entry> entries);
  // Embeds Δ as all-• entries.
  static RefinedKindEnv from(const KindEnv& delta);

  std::optional<Kind> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<std::string> names() const;
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  void push(std::string name, Kind kind);
  RefinedKindEnv with(std::string name, Kind kind) const;
  RefinedKindEnv without(std::string_view name) const;
  RefinedKindEnv without(std::span<const std::string> names) const;
  RefinedKindEnv concat(const RefinedKindEnv& more) const;

  friend bool operator==(const RefinedKindEnv&, const RefinedKindEnv&) = default;

 private:
  std::vector<Entry> entries_;
};

// Γ: ordered term-variable bindings; lookup finds the rightmost one.
class TypeEnv {
 public:
  using Binding = std::pair<std::string, Type>;

  TypeEnv() = default;
  TypeEnv(std::initializer_list<Binding> bindings) : bindings_(bindings) {}
  explicit TypeEnv(std::vector<Binding> bindings)
      : bindings_(std::move(bindings)) {}

  const Type* lookup(std::string_view name) const;
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::vector<Binding>& bindings() const { return bindings_; }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  void push(std::string name, Type type);
  TypeEnv with(std::string name, Type type) const;
  TypeEnv concat(const TypeEnv& more) const;

  template <class F>
  TypeEnv map(F&& f) const {
    TypeEnv out;
    out.bindings_.reserve(bindings_.size());
    for (const auto& [x, t] : bindings_) out.bindings_.emplace_back(x, f(t));
    return out;
  }

 private:
  std::vector<Binding> bindings_;
};

// Fresh names carry the reserved '%' prefix, which user identifiers cannot
// start with. An optional hint letter is kept for display: "%a12".
bool is_internal_name(std::string_view name);

// Source of fresh type variable names "%N". Monotonic; call avoid() on
// every name already in play so emission never collides with it.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(std::uint64_t next) : next_(next) {}

  std::string fresh();
  std::uint64_t next() const { return next_; }

  void avoid(std::string_view name);
  void avoid(const Type& t);
  void avoid(const KindEnv& delta);
  void avoid(const RefinedKindEnv& theta);
  void avoid(const TypeEnv& gamma);

 private:
  std::uint64_t next_ = 0;
};

// Numeric suffix of an internal name ("%12" -> 12, "%y3" -> 3).
std::optional<std::uint64_t> internal_index(std::string_view name);

}  // namespace freezeml

#endif  // FREEZEML_ENV_HPP
