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

#include "freezeml/env.hpp"

#include <algorithm>
#include <cctype>

#include "freezeml/diagnostics.hpp"

namespace freezeml {

KindEnv::KindEnv(std::initializer_list<std::string> names) {
  for (const auto& n : names) push(n);
}

KindEnv::KindEnv(std::vector<std::string> names) {
  for (auto& n : names) push(std::move(n));
}

bool KindEnv::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

void KindEnv::push(std::string name) {
  if (contains(name)) {
    throw Error(ErrorCode::ShadowedTyVar,
                "type variable " + name + " is already in scope");
  }
  names_.push_back(std::move(name));
}

KindEnv KindEnv::concat(const KindEnv& more) const {
  return concat(std::span<const std::string>(more.names_));
}

KindEnv KindEnv::concat(std::span<const std::string> more) const {
  KindEnv out = *this;
  for (const auto& n : more) out.push(n);
  return out;
}

bool KindEnv::disjoint(const KindEnv& other) const {
  return std::none_of(names_.begin(), names_.end(),
                      [&](const std::string& n) { return other.contains(n); });
}

RefinedKindEnv::RefinedKindEnv(std::initializer_list<Entry> entries) {
  for (const auto& [n, k] : entries) push(n, k);
}

RefinedKindEnv::RefinedKindEnv(std::vector<Entry> entries) {
  for (auto& [n, k] : entries) push(std::move(n), k);
}

RefinedKindEnv RefinedKindEnv::from(const KindEnv& delta) {
  RefinedKindEnv out;
  for (const auto& n : delta) out.push(n, Kind::Mono);
  return out;
}

std::optional<Kind> RefinedKindEnv::find(std::string_view name) const {
  for (const auto& [n, k] : entries_) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<std::string> RefinedKindEnv::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

void RefinedKindEnv::push(std::string name, Kind kind) {
  if (contains(name)) {
    throw Error(ErrorCode::ShadowedTyVar,
                "type variable " + name + " is already in scope");
  }
  entries_.emplace_back(std::move(name), kind);
}

RefinedKindEnv RefinedKindEnv::with(std::string name, Kind kind) const {
  RefinedKindEnv out = *this;
  out.push(std::move(name), kind);
  return out;
}

RefinedKindEnv RefinedKindEnv::without(std::string_view name) const {
  RefinedKindEnv out;
  for (const auto& e : entries_) {
    if (e.first != name) out.entries_.push_back(e);
  }
  return out;
}

RefinedKindEnv RefinedKindEnv::without(
    std::span<const std::string> names) const {
  RefinedKindEnv out;
  for (const auto& e : entries_) {
    if (std::find(names.begin(), names.end(), e.first) == names.end()) {
      out.entries_.push_back(e);
    }
  }
  return out;
}

RefinedKindEnv RefinedKindEnv::concat(const RefinedKindEnv& more) const {
  RefinedKindEnv out = *this;
  for (const auto& [n, k] : more) out.push(n, k);
  return out;
}

const Type* TypeEnv::lookup(std::string_view name) const {
  for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
    if (it->first == name) return &it->second;
  }
  return nullptr;
}

void TypeEnv::push(std::string name, Type type) {
  bindings_.emplace_back(std::move(name), std::move(type));
}

TypeEnv TypeEnv::with(std::string name, Type type) const {
  TypeEnv out = *this;
  out.push(std::move(name), std::move(type));
  return out;
}

TypeEnv TypeEnv::concat(const TypeEnv& more) const {
  TypeEnv out = *this;
  for (const auto& b : more) out.bindings_.push_back(b);
  return out;
}

bool is_internal_name(std::string_view name) {
  return !name.empty() && name.front() == '%';
}

std::optional<std::uint64_t> internal_index(std::string_view name) {
  if (!is_internal_name(name)) return std::nullopt;
  std::size_t i = name.size();
  while (i > 1 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
  if (i == name.size()) return std::nullopt;
  std::uint64_t v = 0;
  for (std::size_t j = i; j < name.size(); ++j) {
    v = v * 10 + static_cast<std::uint64_t>(name[j] - '0');
  }
  return v;
}

std::string NameSupply::fresh() { return "%" + std::to_string(next_++); }

void NameSupply::avoid(std::string_view name) {
  if (auto idx = internal_index(name); idx && *idx >= next_) next_ = *idx + 1;
}

void NameSupply::avoid(const Type& t) {
  std::vector<std::string> names;
  collect_names(t, names);
  for (const auto& n : names) avoid(n);
}

void NameSupply::avoid(const KindEnv& delta) {
  for (const auto& n : delta) avoid(n);
}

void NameSupply::avoid(const RefinedKindEnv& theta) {
  for (const auto& e : theta) avoid(e.first);
}

void NameSupply::avoid(const TypeEnv& gamma) {
  for (const auto& b : gamma) avoid(b.second);
}

}  // namespace freezeml
