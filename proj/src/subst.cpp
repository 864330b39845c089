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

#include "freezeml/subst.hpp"

#include <algorithm>
#include <cstdint>

#include "freezeml/statics.hpp"

namespace freezeml {

TypeMap::TypeMap(std::initializer_list<Entry> entries) {
  for (const auto& [n, t] : entries) set(n, t);
}

TypeMap::TypeMap(std::vector<Entry> entries) {
  for (auto& [n, t] : entries) set(std::move(n), std::move(t));
}

const Type* TypeMap::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.first == name) return &e.second;
  }
  return nullptr;
}

std::vector<std::string> TypeMap::domain() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

void TypeMap::set(std::string name, Type image) {
  for (auto& e : entries_) {
    if (e.first == name) {
      e.second = std::move(image);
      return;
    }
  }
  entries_.emplace_back(std::move(name), std::move(image));
}

TypeMap TypeMap::without(std::string_view name) const {
  TypeMap out;
  for (const auto& e : entries_) {
    if (e.first != name) out.entries_.push_back(e);
  }
  return out;
}

TypeMap TypeMap::without(std::span<const std::string> names) const {
  TypeMap out;
  for (const auto& e : entries_) {
    if (std::find(names.begin(), names.end(), e.first) == names.end()) {
      out.entries_.push_back(e);
    }
  }
  return out;
}

Type TypeMap::operator()(std::string_view name) const {
  if (const Type* t = find(name)) return *t;
  return Type::var(std::string(name));
}

bool TypeMap::is_identity() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) {
    return e.second.is_var() && e.second.name() == e.first;
  });
}

namespace {

class Applier {
 public:
  Applier(const TypeMap& m, const Type& root) : root_(root) {
    for (const auto& [n, t] : m) {
      if (!(t.is_var() && t.name() == n)) active_.emplace_back(n, t);
    }
  }

  bool trivial() const { return active_.empty(); }

  Type walk(const Type& t) {
    switch (t.tag()) {
      case Type::Tag::Var: {
        for (auto it = active_.rbegin(); it != active_.rend(); ++it) {
          if (it->first == t.name()) return it->second;
        }
        return t;
      }
      case Type::Tag::Con: {
        std::vector<Type> args;
        args.reserve(t.args().size());
        bool changed = false;
        for (const Type& a : t.args()) {
          args.push_back(walk(a));
          changed |= args.back().identity() != a.identity();
        }
        return changed ? Type::con(t.con(), std::move(args)) : t;
      }
      case Type::Tag::Forall:
        return walk_forall(t);
    }
    return t;
  }

 private:
  Type walk_forall(const Type& t) {
    const std::string& b = t.name();
    std::size_t mark = active_.size();
    // Shadow any mapping of the binder itself.
    active_.emplace_back(b, Type::var(b));
    bool capture = false;
    for (std::size_t i = 0; i < mark && !capture; ++i) {
      if (active_[i].first != b && occurs_free(active_[i].first, t.body()) &&
          occurs_free(b, active_[i].second)) {
        capture = true;
      }
    }
    std::string binder = b;
    if (capture) {
      binder = fresh();
      active_.back().second = Type::var(binder);
    }
    Type body = walk(t.body());
    active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(mark), active_.end());
    if (!capture && body.identity() == t.body().identity()) return t;
    return Type::forall(std::move(binder), std::move(body));
  }

  std::string fresh() {
    if (!next_) {
      std::uint64_t max = 0;
      std::vector<std::string> names;
      collect_names(root_, names);
      for (const auto& [n, img] : active_) {
        names.push_back(n);
        collect_names(img, names);
      }
      for (const auto& n : names) {
        if (auto idx = internal_index(n); idx && *idx + 1 > max) max = *idx + 1;
      }
      next_ = max;
    }
    return "%" + std::to_string((*next_)++);
  }

  const Type& root_;
  std::vector<std::pair<std::string, Type>> active_;
  std::optional<std::uint64_t> next_;
};

}  // namespace

Type apply(const TypeMap& m, const Type& a) {
  Applier ap(m, a);
  if (ap.trivial()) return a;
  return ap.walk(a);
}

TypeEnv apply(const TypeMap& m, const TypeEnv& gamma) {
  return gamma.map([&m](const Type& t) { return apply(m, t); });
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution out;
  for (const auto& [n, t] : inner) out.set(n, apply(outer, t));
  return out;
}

Substitution identity_subst(const RefinedKindEnv& theta) {
  Substitution out;
  for (const auto& [n, k] : theta) out.set(n, Type::var(n));
  return out;
}

Instantiation identity_inst(const KindEnv& delta) {
  Instantiation out;
  for (const auto& n : delta) out.set(n, Type::var(n));
  return out;
}

std::vector<std::string> ftv(const TypeMap& m) {
  std::vector<std::string> out;
  for (const auto& [n, t] : m) ftv_ordered_into(t, out);
  return out;
}

bool subst_wf(const KindEnv& delta, const Substitution& theta,
              const RefinedKindEnv& from, const RefinedKindEnv& to) {
  for (const auto& n : delta) {
    if (from.contains(n) || to.contains(n)) return false;
  }
  for (const auto& [n, t] : theta) {
    if (!from.contains(n)) return false;
  }
  for (const auto& [n, k] : from) {
    if (!has_kind(delta, to, theta(n), k)) return false;
  }
  return true;
}

bool inst_wf(const KindEnv& delta, const Instantiation& inst,
             const KindEnv& from, Kind k, const KindEnv& to) {
  for (const auto& [n, t] : inst) {
    if (!from.contains(n)) return false;
  }
  RefinedKindEnv target = RefinedKindEnv::from(to);
  for (const auto& n : from) {
    auto got = try_kind_of(delta, target, inst(n));
    if (!got || !kind_leq(*got, k)) return false;
  }
  return true;
}

RefinedKindEnv demote(Kind k, const RefinedKindEnv& theta,
                      std::span<const std::string> vars) {
  if (k == Kind::Poly) return theta;
  std::vector<RefinedKindEnv::Entry> out;
  out.reserve(theta.size());
  for (const auto& [n, kind] : theta) {
    bool hit = std::find(vars.begin(), vars.end(), n) != vars.end();
    out.emplace_back(n, hit ? Kind::Mono : kind);
  }
  return RefinedKindEnv(std::move(out));
}

}  // namespace freezeml
